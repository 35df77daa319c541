//! Benchmark harness: times every algorithm on seeded random graphs and
//! expresses wall time as a percentage of classic Floyd-Warshall.
//!
//! Per graph and algorithm, one warm-up run is discarded and one run is
//! measured with a monotonic clock around the solve call only. Percentages
//! are computed per trial, then averaged over trials.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::baselines::{dijkstra_apsp, johnson, AdjacencyListGraph, OpCounts};
use crate::error::{BaselineError, GenError};
use crate::fw::{fw_classic, fw_improved, OrderingStrategy};
use crate::gen::{generate, EdgeCount, GenSpec, Regime};
use crate::graph::EdgeListGraph;
use crate::matrix::DistanceMatrix;
use crate::stats::RelaxStats;

/// Algorithms the harness knows how to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Fw,
    FwImprovedNatural,
    FwImprovedMinProd,
    Dijkstra,
    Johnson,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Fw,
        Algorithm::FwImprovedNatural,
        Algorithm::FwImprovedMinProd,
        Algorithm::Dijkstra,
        Algorithm::Johnson,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Fw => "fw",
            Algorithm::FwImprovedNatural => "fw-improved-natural",
            Algorithm::FwImprovedMinProd => "fw-improved-minprod",
            Algorithm::Dijkstra => "dijkstra",
            Algorithm::Johnson => "johnson",
        }
    }

    /// Row heading in the percentage table.
    pub fn display_name(self) -> &'static str {
        match self {
            Algorithm::Fw => "Floyd-Warshall",
            Algorithm::FwImprovedNatural => "Ours (natural order)",
            Algorithm::FwImprovedMinProd => "Ours",
            Algorithm::Dijkstra => "Dijkstra's",
            Algorithm::Johnson => "Johnson's",
        }
    }

    pub fn requires_non_negative(self) -> bool {
        self == Algorithm::Dijkstra
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL.into_iter().find(|a| a.id() == s).ok_or_else(|| {
            let ids: Vec<_> = Algorithm::ALL.iter().map(|a| a.id()).collect();
            format!("unknown algorithm `{s}` (expected one of {})", ids.join(", "))
        })
    }
}

/// A graph in both representations, built before any timing starts.
pub struct PreparedGraph {
    pub matrix: DistanceMatrix,
    pub lists: AdjacencyListGraph,
}

impl PreparedGraph {
    pub fn new(g: &EdgeListGraph) -> Self {
        PreparedGraph { matrix: DistanceMatrix::from_edge_list(g), lists: AdjacencyListGraph::from(g) }
    }
}

/// Result of one solve call.
#[derive(Debug, Clone)]
pub struct SolveOutput {
    pub matrix: DistanceMatrix,
    pub relax: Option<RelaxStats>,
    pub ops: Option<OpCounts>,
}

impl SolveOutput {
    /// Relaxation attempts for the Floyd-Warshall variants, total operation
    /// count for the baselines.
    pub fn work(&self) -> u64 {
        match (&self.relax, &self.ops) {
            (Some(r), _) => r.attempts_total,
            (None, Some(o)) => o.total(),
            (None, None) => 0,
        }
    }
}

/// Runs `alg` on a prepared graph.
pub fn solve(alg: Algorithm, g: &PreparedGraph) -> Result<SolveOutput, BaselineError> {
    let fw = |(matrix, stats): (DistanceMatrix, RelaxStats)| SolveOutput { matrix, relax: Some(stats), ops: None };
    let base = |(matrix, ops): (DistanceMatrix, OpCounts)| SolveOutput { matrix, relax: None, ops: Some(ops) };
    Ok(match alg {
        Algorithm::Fw => fw(fw_classic(&g.matrix)),
        Algorithm::FwImprovedNatural => fw(fw_improved(&g.matrix, OrderingStrategy::NaturalOrder)),
        Algorithm::FwImprovedMinProd => fw(fw_improved(&g.matrix, OrderingStrategy::MinInOutProduct)),
        Algorithm::Dijkstra => base(dijkstra_apsp(&g.lists)?),
        Algorithm::Johnson => base(johnson(&g.lists)?),
    })
}

/// One discarded warm-up, then one timed run. Returns the output and the
/// elapsed nanoseconds (at least 1).
pub fn measure(alg: Algorithm, g: &PreparedGraph) -> Result<(SolveOutput, u64), BaselineError> {
    drop(solve(alg, g)?);
    let start = Instant::now();
    let out = solve(alg, g)?;
    let elapsed = start.elapsed().as_nanos().max(1) as u64;
    Ok((out, elapsed))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub n: usize,
    pub regimes: Vec<Regime>,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    pub seed_base: u64,
    /// Time classic Floyd-Warshall on every graph and report percentages of it.
    pub include_fw_baseline: bool,
    pub weight_min: i64,
    pub weight_max: i64,
}

impl BenchConfig {
    /// All regimes, all algorithms, 10 trials, weights in [1, 100].
    pub fn new(n: usize) -> Self {
        BenchConfig {
            n,
            regimes: Regime::ALL.to_vec(),
            trials: 10,
            algorithms: Algorithm::ALL.to_vec(),
            seed_base: 0,
            include_fw_baseline: true,
            weight_min: GenSpec::DEFAULT_WEIGHTS.0,
            weight_max: GenSpec::DEFAULT_WEIGHTS.1,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.trials == 0 {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(BenchError::Config("no algorithms selected".into()));
        }
        if self.regimes.is_empty() {
            return Err(BenchError::Config("no regimes selected".into()));
        }
        if self.weight_min < 0 {
            if let Some(a) = self.algorithms.iter().find(|a| a.requires_non_negative()) {
                return Err(BenchError::Config(format!(
                    "{a} needs non-negative weights, got wmin={}",
                    self.weight_min
                )));
            }
        }
        for &regime in &self.regimes {
            self.gen_spec(regime, 0).validate()?;
        }
        Ok(())
    }

    pub fn gen_spec(&self, regime: Regime, trial: usize) -> GenSpec {
        GenSpec::new(self.n, EdgeCount::Regime(regime), self.seed_base.wrapping_add(trial as u64))
            .with_weights(self.weight_min, self.weight_max)
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("{algorithm} failed on seed {seed}: {source}")]
    Solve { algorithm: Algorithm, seed: u64, source: BaselineError },
}

/// One (graph, algorithm) measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub regime: Regime,
    pub trial: usize,
    pub seed: u64,
    pub wall_time_ns: u64,
    /// Relaxation attempts (Floyd-Warshall variants) or operation count (baselines).
    pub attempts: u64,
    pub pct_of_fw: Option<f64>,
}

pub const CSV_HEADER: &str = "algorithm,n,m,regime,trial,seed,wall_time_ns,attempts,pct_of_fw";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        let pct = self.pct_of_fw.map(|p| format!("{p:.4}")).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.algorithm,
            self.n,
            self.m,
            self.regime.label(),
            self.trial,
            self.seed,
            self.wall_time_ns,
            self.attempts,
            pct
        )
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub records: Vec<BenchRecord>,
}

/// Runs the benchmark, calling `progress` after every record.
pub fn run_bench<F>(config: &BenchConfig, mut progress: F) -> Result<BenchReport, BenchError>
where
    F: FnMut(&BenchRecord),
{
    config.validate()?;
    let mut records = Vec::with_capacity(config.regimes.len() * config.trials * config.algorithms.len());
    for &regime in &config.regimes {
        for trial in 0..config.trials {
            let spec = config.gen_spec(regime, trial);
            let graph = generate(&spec)?;
            let prepared = PreparedGraph::new(&graph);
            let fail = |algorithm, source| BenchError::Solve { algorithm, seed: spec.seed, source };

            let baseline = if config.include_fw_baseline {
                let (out, ns) = measure(Algorithm::Fw, &prepared).map_err(|e| fail(Algorithm::Fw, e))?;
                Some((out.work(), ns))
            } else {
                None
            };

            for &algorithm in &config.algorithms {
                let (attempts, ns) = match (algorithm, baseline) {
                    (Algorithm::Fw, Some(measured)) => measured,
                    _ => {
                        let (out, ns) = measure(algorithm, &prepared).map_err(|e| fail(algorithm, e))?;
                        (out.work(), ns)
                    }
                };
                let record = BenchRecord {
                    algorithm,
                    n: config.n,
                    m: graph.m(),
                    regime,
                    trial,
                    seed: spec.seed,
                    wall_time_ns: ns,
                    attempts,
                    pct_of_fw: baseline.map(|(_, fw_ns)| 100.0 * ns as f64 / fw_ns as f64),
                };
                progress(&record);
                records.push(record);
            }
        }
    }
    Ok(BenchReport { config: config.clone(), records })
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    (count > 0).then(|| sum / count as f64)
}

impl BenchReport {
    fn select(&self, alg: Algorithm, regime: Regime) -> impl Iterator<Item = &BenchRecord> {
        self.records.iter().filter(move |r| r.algorithm == alg && r.regime == regime)
    }

    /// Mean over trials of the per-trial percentage of Floyd-Warshall time.
    pub fn mean_pct_of_fw(&self, alg: Algorithm, regime: Regime) -> Option<f64> {
        mean(self.select(alg, regime).filter_map(|r| r.pct_of_fw))
    }

    pub fn mean_wall_time_ns(&self, alg: Algorithm, regime: Regime) -> Option<f64> {
        mean(self.select(alg, regime).map(|r| r.wall_time_ns as f64))
    }

    pub fn mean_attempts(&self, alg: Algorithm, regime: Regime) -> Option<f64> {
        mean(self.select(alg, regime).map(|r| r.attempts as f64))
    }

    pub fn write_csv<W: Write>(&self, mut sink: W) -> io::Result<()> {
        writeln!(sink, "{CSV_HEADER}")?;
        for r in &self.records {
            writeln!(sink, "{}", r.csv_row())?;
        }
        sink.flush()
    }

    /// Markdown table with one row per algorithm (classic Floyd-Warshall
    /// omitted) and one column per regime. Cells hold the mean percentage of
    /// Floyd-Warshall time, or the mean wall time in milliseconds when no
    /// baseline was measured.
    pub fn markdown_table(&self) -> String {
        let cfg = &self.config;
        let pct = cfg.include_fw_baseline;
        let mut out = String::new();
        let caption = if pct {
            "Execution time as a percentage of Floyd-Warshall (per-trial ratio, averaged)"
        } else {
            "Mean execution time in milliseconds"
        };
        out.push_str(&format!(
            "{caption}; N={}, {} trial(s), weights [{}, {}], seed base {}\n\n",
            cfg.n, cfg.trials, cfg.weight_min, cfg.weight_max, cfg.seed_base
        ));
        out.push_str("| Number of Edges |");
        for r in &cfg.regimes {
            out.push_str(&format!(" {} |", r.label()));
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(cfg.regimes.len()));
        out.push('\n');

        let rows: Vec<Algorithm> = cfg.algorithms.iter().copied().filter(|&a| !(pct && a == Algorithm::Fw)).collect();
        let rows = if rows.is_empty() { vec![Algorithm::Fw] } else { rows };
        for alg in rows {
            out.push_str(&format!("| {} |", alg.display_name()));
            for &regime in &cfg.regimes {
                let cell = if pct {
                    self.mean_pct_of_fw(alg, regime).map(|p| format!("{}%", fmt_pct(p)))
                } else {
                    self.mean_wall_time_ns(alg, regime).map(|ns| format!("{:.3}", ns / 1e6))
                };
                out.push_str(&format!(" {} |", cell.unwrap_or_else(|| "-".into())));
            }
            out.push('\n');
        }
        out
    }

    /// Mean work per algorithm and regime, as a fraction of `N³`.
    pub fn work_ratios(&self) -> HashMap<(Algorithm, Regime), f64> {
        let cube = (self.config.n as f64).powi(3);
        let mut out = HashMap::new();
        for &alg in &self.config.algorithms {
            for &regime in &self.config.regimes {
                if let Some(a) = self.mean_attempts(alg, regime) {
                    out.insert((alg, regime), a / cube);
                }
            }
        }
        out
    }
}

fn fmt_pct(p: f64) -> String {
    if p >= 10.0 {
        format!("{p:.1}")
    } else {
        format!("{p:.2}")
    }
}
