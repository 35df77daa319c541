//! Cross-checks every algorithm against classic Floyd-Warshall on seeded
//! random graphs.
//!
//! Trial `t` draws a graph with seed `seed_base + t` from regime
//! `Regime::ALL[t % 9]`, so consecutive trials sweep all densities. Besides
//! cell-for-cell agreement, each improved run must make no useless attempt,
//! stay within `N³` attempts, and end with list totals equal to the number of
//! finite off-diagonal cells.

use std::fmt;

use rayon::prelude::*;

use crate::baselines::{dijkstra_apsp, johnson, AdjacencyListGraph};
use crate::bench::Algorithm;
use crate::error::{BaselineError, GenError};
use crate::fw::{detect_negative_cycle, fw_classic, fw_improved_observed, OrderingStrategy};
use crate::gen::{generate, EdgeCount, GenSpec, Regime};
use crate::matrix::DistanceMatrix;
use crate::weight::Weight;

/// Weight range used by `--negative` runs.
pub const NEGATIVE_WEIGHTS: (i64, i64) = (-10, 100);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    pub trials: usize,
    pub seed_base: u64,
    /// Draw weights from [-10, 100] and skip Dijkstra.
    pub negative: bool,
    /// Spread trials over the rayon thread pool.
    pub parallel: bool,
}

impl VerifyConfig {
    pub fn new(n: usize, trials: usize, seed_base: u64) -> Self {
        VerifyConfig { n, trials, seed_base, negative: false, parallel: true }
    }

    pub fn gen_spec(&self, trial: usize) -> GenSpec {
        let regime = Regime::ALL[trial % Regime::ALL.len()];
        let spec = GenSpec::new(self.n, EdgeCount::Regime(regime), self.seed_base.wrapping_add(trial as u64));
        if self.negative {
            spec.with_weights(NEGATIVE_WEIGHTS.0, NEGATIVE_WEIGHTS.1)
        } else {
            spec
        }
    }
}

/// First cell where an algorithm disagrees with classic Floyd-Warshall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub values: Vec<(Algorithm, Weight)>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell ({}, {}):", self.row + 1, self.col + 1)?;
        for (alg, w) in &self.values {
            write!(f, " {alg}={w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    /// Every algorithm reported the negative cycle.
    AgreeNegativeCycle,
    Mismatch(Mismatch),
    /// The algorithms disagree on whether a negative cycle exists.
    CycleDisagreement(String),
    /// An instrumentation invariant of the improved algorithm failed.
    CounterViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub regime: Regime,
    pub m: usize,
    pub algorithms: Vec<Algorithm>,
    pub verdict: Verdict,
}

impl TrialOutcome {
    pub fn agrees(&self) -> bool {
        matches!(self.verdict, Verdict::Agree | Verdict::AgreeNegativeCycle)
    }
}

impl fmt::Display for TrialOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trial {} seed {} regime {} m={}: ", self.trial, self.seed, self.regime.label(), self.m)?;
        match &self.verdict {
            Verdict::Agree => write!(f, "agree"),
            Verdict::AgreeNegativeCycle => write!(f, "agree (negative cycle)"),
            Verdict::Mismatch(m) => write!(f, "MISMATCH at {m}"),
            Verdict::CycleDisagreement(s) => write!(f, "MISMATCH on negative cycle: {s}"),
            Verdict::CounterViolation(s) => write!(f, "COUNTER VIOLATION: {s}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub outcomes: Vec<TrialOutcome>,
}

impl VerifyReport {
    pub fn agreeing(&self) -> usize {
        self.outcomes.iter().filter(|o| o.agrees()).count()
    }

    pub fn all_agree(&self) -> bool {
        self.agreeing() == self.outcomes.len()
    }

    pub fn first_failure(&self) -> Option<&TrialOutcome> {
        self.outcomes.iter().find(|o| !o.agrees())
    }

    pub fn summary(&self) -> String {
        format!("{}/{} agree", self.agreeing(), self.outcomes.len())
    }
}

pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport, GenError> {
    for t in 0..config.trials.min(Regime::ALL.len()) {
        config.gen_spec(t).validate()?;
    }
    let run = |t| check_trial(config, t);
    let mut outcomes: Vec<TrialOutcome> = if config.parallel {
        (0..config.trials).into_par_iter().map(run).collect::<Result<_, _>>()?
    } else {
        (0..config.trials).map(run).collect::<Result<_, _>>()?
    };
    outcomes.sort_by_key(|o| o.trial);
    Ok(VerifyReport { outcomes })
}

/// Runs every applicable algorithm on the graph of trial `t`.
pub fn check_trial(config: &VerifyConfig, t: usize) -> Result<TrialOutcome, GenError> {
    let spec = config.gen_spec(t);
    let graph = generate(&spec)?;
    let regime = Regime::ALL[t % Regime::ALL.len()];
    let matrix = DistanceMatrix::from_edge_list(&graph);
    let lists = AdjacencyListGraph::from(&graph);
    let include_dijkstra = !config.negative;

    let mut algorithms =
        vec![Algorithm::Fw, Algorithm::FwImprovedNatural, Algorithm::FwImprovedMinProd, Algorithm::Johnson];
    if include_dijkstra {
        algorithms.push(Algorithm::Dijkstra);
    }
    let outcome = |verdict| TrialOutcome {
        trial: t,
        seed: spec.seed,
        regime,
        m: graph.m(),
        algorithms: algorithms.clone(),
        verdict,
    };

    let n = matrix.n();
    let (classic, _) = fw_classic(&matrix);
    let mut improved = Vec::new();
    for (alg, strategy) in [
        (Algorithm::FwImprovedNatural, OrderingStrategy::NaturalOrder),
        (Algorithm::FwImprovedMinProd, OrderingStrategy::MinInOutProduct),
    ] {
        let mut list_totals = (0, 0);
        let (out, stats) = fw_improved_observed(&matrix, strategy, |view| {
            if view.step + 1 == n {
                let adj = view.adjacency.expect("improved runs expose their lists");
                list_totals = (adj.total_entries(), adj.total_outgoing_entries());
            }
        });
        let violation = if stats.useless_attempts != 0 {
            Some(format!("{alg} made {} useless attempts", stats.useless_attempts))
        } else if stats.attempts_total > (n as u64).pow(3) {
            Some(format!("{alg} made {} attempts, more than N^3", stats.attempts_total))
        } else if list_totals != (out.finite_off_diagonal(), out.finite_off_diagonal()) {
            Some(format!("{alg} list totals {list_totals:?} differ from {} finite cells", out.finite_off_diagonal()))
        } else {
            stats.check_consistency(n).err().map(|e| format!("{alg}: {e}"))
        };
        if let Some(v) = violation {
            return Ok(outcome(Verdict::CounterViolation(v)));
        }
        improved.push((alg, out));
    }

    let johnson_result = johnson(&lists);
    if let Some(v) = detect_negative_cycle(&classic) {
        let mut disagreeing = Vec::new();
        for (alg, out) in &improved {
            if detect_negative_cycle(out).is_none() {
                disagreeing.push(format!("{alg} found none"));
            }
        }
        if !matches!(johnson_result, Err(BaselineError::NegativeCycle { .. })) {
            disagreeing.push("johnson found none".into());
        }
        return Ok(outcome(if disagreeing.is_empty() {
            Verdict::AgreeNegativeCycle
        } else {
            Verdict::CycleDisagreement(format!("fw flags vertex {}; {}", v + 1, disagreeing.join(", ")))
        }));
    }

    let mut others = improved;
    match johnson_result {
        Ok((m, _)) => others.push((Algorithm::Johnson, m)),
        Err(e) => return Ok(outcome(Verdict::CycleDisagreement(format!("johnson: {e}; fw found none")))),
    }
    if include_dijkstra {
        let (m, _) = dijkstra_apsp(&lists).expect("verify graphs without --negative have non-negative weights");
        others.push((Algorithm::Dijkstra, m));
    }

    for (_, out) in &others {
        if let Some((row, col, _, _)) = classic.first_difference(out) {
            let mut values = vec![(Algorithm::Fw, classic.get(row, col))];
            values.extend(others.iter().map(|(a, m)| (*a, m.get(row, col))));
            return Ok(outcome(Verdict::Mismatch(Mismatch { row, col, values })));
        }
    }
    Ok(outcome(Verdict::Agree))
}
