//! The `apsp` command line: `gen`, `solve`, `verify` and `bench`.
//!
//! Exit codes: 0 on success, 1 on validation or verification failure, 2 on
//! usage errors. `APSP_SEED`, when set, overrides `--seed-base`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::baselines::{dijkstra_apsp, johnson, AdjacencyListGraph};
use crate::bench::{run_bench, Algorithm, BenchConfig};
use crate::fw::{detect_negative_cycle, fw_classic, fw_improved, OrderingStrategy};
use crate::gen::{generate, EdgeCount, GenSpec, Regime};
use crate::graph::EdgeListGraph;
use crate::io::{read_edge_list, read_matrix, write_edge_list, write_matrix, InfMode};
use crate::matrix::DistanceMatrix;
use crate::verify::{run_verify, VerifyConfig};

pub const SEED_ENV: &str = "APSP_SEED";

#[derive(Debug, Parser)]
#[command(name = "apsp", version, about = "All-pairs shortest paths: generate, solve, verify, benchmark")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded random graph in edge-list format.
    Gen(GenArgs),
    /// Solve all-pairs shortest paths for a matrix or edge-list file.
    Solve(SolveArgs),
    /// Run every algorithm on seeded graphs and check that they agree.
    Verify(VerifyArgs),
    /// Time every algorithm and report percentages of Floyd-Warshall time.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    /// Density regime (n-half, n, 2n, 4n, lgn-n, 2lgn-n, 4lgn-n, n-over-lgn-n, n-half-n).
    #[arg(long, conflicts_with = "m", required_unless_present = "m")]
    pub regime: Option<Regime>,
    /// Explicit edge count.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = GenSpec::DEFAULT_WEIGHTS.0, allow_negative_numbers = true)]
    pub wmin: i64,
    #[arg(long, default_value_t = GenSpec::DEFAULT_WEIGHTS.1, allow_negative_numbers = true)]
    pub wmax: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; the graph goes to standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveAlgo {
    Fw,
    FwImproved,
    Dijkstra,
    Johnson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Natural,
    Minprod,
}

impl From<Order> for OrderingStrategy {
    fn from(o: Order) -> Self {
        match o {
            Order::Natural => OrderingStrategy::NaturalOrder,
            Order::Minprod => OrderingStrategy::MinInOutProduct,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: SolveAlgo,
    /// Vertex ordering for fw-improved.
    #[arg(long, value_enum, default_value_t = Order::Minprod)]
    pub order: Order,
    /// Input in matrix format.
    #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
    pub matrix: Option<PathBuf>,
    /// Input in edge-list format.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Treat this numeric matrix entry as infinity (legacy files use 9999).
    #[arg(long, num_args = 0..=1, default_missing_value = "9999", value_name = "VALUE", requires = "matrix")]
    pub legacy_inf: Option<i64>,
    /// Write the distance matrix here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print run statistics as one JSON line.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed_base: u64,
    /// Use weights in [-10, 100]; Dijkstra is skipped.
    #[arg(long)]
    pub negative: bool,
    /// Run trials one after another instead of in parallel.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    /// Comma-separated regimes; all nine by default.
    #[arg(long, value_delimiter = ',')]
    pub regimes: Vec<Regime>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Comma-separated algorithms (fw, fw-improved-natural, fw-improved-minprod, dijkstra, johnson).
    #[arg(long, value_delimiter = ',')]
    pub algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 0)]
    pub seed_base: u64,
    /// Skip the classic Floyd-Warshall denominator; report milliseconds instead.
    #[arg(long)]
    pub no_fw_baseline: bool,
    #[arg(long, default_value_t = GenSpec::DEFAULT_WEIGHTS.0, allow_negative_numbers = true)]
    pub wmin: i64,
    #[arg(long, default_value_t = GenSpec::DEFAULT_WEIGHTS.1, allow_negative_numbers = true)]
    pub wmax: i64,
    /// Write CSV records here; otherwise they precede the table on standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Print a line per measurement to standard error.
    #[arg(long)]
    pub progress: bool,
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let seed_override = match std::env::var(SEED_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(seed) => Some(seed),
            Err(_) => {
                let _ = writeln!(err, "error: {SEED_ENV}={v:?} is not an unsigned integer");
                return 2;
            }
        },
        Err(_) => None,
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a, out, err),
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Verify(a) => cmd_verify(&a, seed_override, out),
        Command::Bench(a) => cmd_bench(&a, seed_override, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(f))
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let edges = match (a.regime, a.m) {
        (Some(r), _) => EdgeCount::Regime(r),
        (None, Some(m)) => EdgeCount::Exact(m),
        (None, None) => bail!("one of --regime or --m is required"),
    };
    let spec = GenSpec::new(a.n, edges, a.seed).with_weights(a.wmin, a.wmax);
    let graph = generate(&spec)?;
    let comments = [spec.metadata_comment()];
    let summary = format!("m={} seed={}", graph.m(), spec.seed);
    match &a.out {
        Some(path) => {
            write_edge_list(&graph, &comments, create(path)?)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            write_edge_list(&graph, &comments, &mut *out)?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(0)
}

fn load_input(a: &SolveArgs) -> anyhow::Result<DistanceMatrix> {
    if let Some(path) = &a.matrix {
        let mode = match a.legacy_inf {
            Some(v) => InfMode::Legacy(v),
            None => InfMode::Canonical,
        };
        let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        return read_matrix(f, mode).with_context(|| format!("reading {}", path.display()));
    }
    let path = a.edges.as_ref().expect("clap requires --matrix or --edges");
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let g = read_edge_list(f).with_context(|| format!("reading {}", path.display()))?;
    Ok(DistanceMatrix::from_edge_list(&g))
}

fn merge(into: &mut serde_json::Value, from: serde_json::Value) {
    if let (Some(a), serde_json::Value::Object(b)) = (into.as_object_mut(), from) {
        a.extend(b);
    }
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let input = load_input(a)?;
    let n = input.n();
    let (result, stats) = match a.algo {
        SolveAlgo::Fw | SolveAlgo::FwImproved => {
            let (m, s) = if a.algo == SolveAlgo::Fw { fw_classic(&input) } else { fw_improved(&input, a.order.into()) };
            if let Some(v) = detect_negative_cycle(&m) {
                bail!("negative cycle through vertex {}", v + 1);
            }
            let mut record = json!({
                "algorithm": if a.algo == SolveAlgo::Fw { "fw" } else { "fw-improved" },
                "n": n,
            });
            merge(&mut record, serde_json::to_value(&s)?);
            record["k_order"] = json!(s.k_order_one_based());
            if a.algo == SolveAlgo::FwImproved {
                record["order"] = json!(OrderingStrategy::from(a.order).as_str());
            }
            (m, record)
        }
        SolveAlgo::Dijkstra | SolveAlgo::Johnson => {
            let g = AdjacencyListGraph::from(&EdgeListGraph::from_matrix(&input));
            let (m, ops) = if a.algo == SolveAlgo::Dijkstra { dijkstra_apsp(&g)? } else { johnson(&g)? };
            let mut record = json!({
                "algorithm": if a.algo == SolveAlgo::Dijkstra { "dijkstra" } else { "johnson" },
                "n": n,
                "m": g.m(),
            });
            merge(&mut record, serde_json::to_value(ops)?);
            record["ops_total"] = json!(ops.total());
            (m, record)
        }
    };
    match &a.out {
        Some(path) => write_matrix(&result, create(path)?)?,
        None => write_matrix(&result, &mut *out)?,
    }
    if a.stats {
        writeln!(out, "{stats}")?;
    }
    Ok(0)
}

pub fn cmd_verify(a: &VerifyArgs, seed_override: Option<u64>, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = VerifyConfig {
        n: a.n,
        trials: a.trials,
        seed_base: seed_override.unwrap_or(a.seed_base),
        negative: a.negative,
        parallel: !a.sequential,
    };
    let report = run_verify(&config)?;
    for o in &report.outcomes {
        writeln!(out, "{o}")?;
    }
    if a.negative {
        writeln!(out, "dijkstra skipped (negative weights)")?;
    }
    writeln!(out, "{}", report.summary())?;
    Ok(if report.all_agree() { 0 } else { 1 })
}

pub fn cmd_bench(
    a: &BenchArgs,
    seed_override: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let defaults = BenchConfig::new(a.n);
    let config = BenchConfig {
        regimes: if a.regimes.is_empty() { defaults.regimes.clone() } else { a.regimes.clone() },
        trials: a.trials,
        algorithms: if a.algos.is_empty() { defaults.algorithms.clone() } else { a.algos.clone() },
        seed_base: seed_override.unwrap_or(a.seed_base),
        include_fw_baseline: !a.no_fw_baseline,
        weight_min: a.wmin,
        weight_max: a.wmax,
        ..defaults
    };
    let report = run_bench(&config, |r| {
        if a.progress {
            let _ = writeln!(err, "{} {} trial {}: {} ns", r.algorithm, r.regime.label(), r.trial, r.wall_time_ns);
        }
    })?;
    match &a.csv {
        Some(path) => report.write_csv(create(path)?)?,
        None => {
            report.write_csv(&mut *out)?;
            writeln!(out)?;
        }
    }
    write!(out, "{}", report.markdown_table())?;
    Ok(0)
}
