#![allow(dead_code)]

use apsp::{
    detect_negative_cycle, fw_classic, generate, DistanceMatrix, EdgeCount, EdgeListGraph, GenSpec, Regime, Weight,
};

pub const SIZES: [usize; 6] = [2, 4, 8, 16, 32, 64];
pub const WEIGHT_RANGES: [(i64, i64); 2] = [(1, 100), (-10, 100)];
pub const SEEDS_PER_CELL: u64 = 3;

pub const EXAMPLE: &str = "5\n0 6 INF 5 INF\n2 0 3 -1 2\n-2 INF 0 2 INF\n-1 1 2 0 -1\n1 INF INF INF 0\n";
pub const EXAMPLE_SOLVED: &str = "5\n0 6 7 5 4\n-2 0 1 -1 -2\n-2 3 0 2 1\n-1 1 2 0 -1\n1 7 8 6 0\n";

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub struct Case {
    pub n: usize,
    pub regime: Regime,
    pub weights: (i64, i64),
    pub seed: u64,
    pub graph: EdgeListGraph,
    pub matrix: DistanceMatrix,
    pub expected: DistanceMatrix,
}

impl Case {
    pub fn label(&self) -> String {
        format!("n={} regime={} w={:?} seed={}", self.n, self.regime.label(), self.weights, self.seed)
    }
}

/// Seeded graphs over every size, regime and weight range, with negative-cycle
/// instances removed. `expected` is the classic Floyd-Warshall result.
pub fn corpus() -> (Vec<Case>, usize) {
    let mut cases = Vec::new();
    let mut dropped = 0;
    for (si, &n) in SIZES.iter().enumerate() {
        for (ri, &regime) in Regime::ALL.iter().enumerate() {
            for (wi, &weights) in WEIGHT_RANGES.iter().enumerate() {
                for rep in 0..SEEDS_PER_CELL {
                    let seed = 10_000 * si as u64 + 100 * ri as u64 + 10 * wi as u64 + rep;
                    let spec = GenSpec::new(n, EdgeCount::Regime(regime), seed).with_weights(weights.0, weights.1);
                    let graph = generate(&spec).expect("valid spec");
                    let matrix = DistanceMatrix::from_edge_list(&graph);
                    let (expected, _) = fw_classic(&matrix);
                    if detect_negative_cycle(&expected).is_some() {
                        dropped += 1;
                        continue;
                    }
                    cases.push(Case { n, regime, weights, seed, graph, matrix, expected });
                }
            }
        }
    }
    (cases, dropped)
}

/// Shortest distances by enumerating every simple path. `None` when some
/// simple cycle has negative weight. Exponential, so only for tiny graphs.
pub fn brute_force(m: &DistanceMatrix) -> Option<Vec<Vec<Weight>>> {
    let n = m.n();
    let mut best = vec![vec![Weight::Infinity; n]; n];
    let mut negative_cycle = false;
    for (s, row) in best.iter_mut().enumerate() {
        let mut walker = PathWalker { m, start: s, on_path: vec![false; n], best: row, negative_cycle: false };
        walker.on_path[s] = true;
        walker.walk(s, 0);
        negative_cycle |= walker.negative_cycle;
    }
    (!negative_cycle).then_some(best)
}

struct PathWalker<'a> {
    m: &'a DistanceMatrix,
    start: usize,
    on_path: Vec<bool>,
    best: &'a mut [Weight],
    negative_cycle: bool,
}

impl PathWalker<'_> {
    fn walk(&mut self, u: usize, len: i64) {
        if Weight::Finite(len) < self.best[u] {
            self.best[u] = Weight::Finite(len);
        }
        for v in 0..self.m.n() {
            let Some(w) = self.m.get(u, v).finite() else { continue };
            if v == u {
                continue;
            }
            if v == self.start {
                self.negative_cycle |= len + w < 0;
            } else if !self.on_path[v] {
                self.on_path[v] = true;
                self.walk(v, len + w);
                self.on_path[v] = false;
            }
        }
    }
}
