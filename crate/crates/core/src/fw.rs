//! Floyd-Warshall, classic and with useless relaxations eliminated.
//!
//! The classic variant tries every `(k, i, j)` triple. The improved variant
//! keeps, for every vertex, the lists of vertices currently connected to it by
//! a finite cell, and at iteration `k` only pairs `i ∈ in(k)`, `j ∈ out(k)`
//! are attempted. Whenever a relaxation turns an infinite cell `(i, j)`
//! finite, `j` is appended to `out(i)` and `i` to `in(j)`, so later iterations
//! see the new path. Both operands of every attempt are therefore finite.

use std::fmt;
use std::str::FromStr;

use crate::adjacency::DynAdjacency;
use crate::matrix::{DistanceMatrix, INF_RAW, NEG_FLOOR};
use crate::stats::RelaxStats;

/// Order in which the improved algorithm picks intermediate vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingStrategy {
    /// Vertices 1..N in id order.
    NaturalOrder,
    /// Next the unprocessed vertex with the smallest `|in| * |out|`, lowest id on ties.
    MinInOutProduct,
}

impl OrderingStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderingStrategy::NaturalOrder => "natural",
            OrderingStrategy::MinInOutProduct => "minprod",
        }
    }
}

impl fmt::Display for OrderingStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderingStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "natural" => Ok(OrderingStrategy::NaturalOrder),
            "minprod" => Ok(OrderingStrategy::MinInOutProduct),
            other => Err(format!("unknown ordering `{other}` (expected natural or minprod)")),
        }
    }
}

/// State after one outer-loop iteration, handed to observers.
#[derive(Debug)]
pub struct IterationView<'a> {
    /// 0-based position in the processing order.
    pub step: usize,
    /// The intermediate vertex of this iteration (0-based).
    pub vertex: usize,
    pub attempts: u64,
    pub successes: u64,
    pub useless: u64,
    /// `|in(vertex)|` and `|out(vertex)|` when the iteration started.
    /// `None` for the classic algorithm, which keeps no lists.
    pub lists_at_start: Option<(usize, usize)>,
    pub matrix: &'a DistanceMatrix,
    pub adjacency: Option<&'a DynAdjacency>,
}

/// Classic Floyd-Warshall over all `N³` triples.
pub fn fw_classic(m: &DistanceMatrix) -> (DistanceMatrix, RelaxStats) {
    fw_classic_observed(m, |_| {})
}

/// [`fw_classic`] calling `observer` after every outer iteration.
pub fn fw_classic_observed<F>(m: &DistanceMatrix, mut observer: F) -> (DistanceMatrix, RelaxStats)
where
    F: FnMut(&IterationView<'_>),
{
    let n = m.n();
    let mut out = m.clone();
    let mut stats = RelaxStats::with_capacity(n);
    let mut row_k = vec![0i64; n];

    for k in 0..n {
        let (mut successes, mut useless) = (0u64, 0u64);
        {
            let cells = out.raw_mut();
            row_k.copy_from_slice(&cells[k * n..(k + 1) * n]);
            for row_i in cells.chunks_exact_mut(n) {
                let dik = row_i[k];
                // Branch-free body: every triple does the same work whether or
                // not an operand is infinite.
                for (dij, &dkj) in row_i.iter_mut().zip(&row_k) {
                    let is_useless = (dik == INF_RAW) | (dkj == INF_RAW);
                    let candidate = (dik + dkj).max(NEG_FLOOR);
                    let fire = !is_useless & (candidate < *dij);
                    *dij = if fire { candidate } else { *dij };
                    successes += fire as u64;
                    useless += is_useless as u64;
                }
            }
        }
        let attempts = (n * n) as u64;
        stats.record_iteration(k, attempts, successes, useless);
        observer(&IterationView {
            step: k,
            vertex: k,
            attempts,
            successes,
            useless,
            lists_at_start: None,
            matrix: &out,
            adjacency: None,
        });
    }
    (out, stats)
}

/// Floyd-Warshall restricted to pairs connected through the intermediate
/// vertex by finite cells.
pub fn fw_improved(m: &DistanceMatrix, strategy: OrderingStrategy) -> (DistanceMatrix, RelaxStats) {
    fw_improved_observed(m, strategy, |_| {})
}

/// [`fw_improved`] calling `observer` after every outer iteration.
pub fn fw_improved_observed<F>(
    m: &DistanceMatrix,
    strategy: OrderingStrategy,
    mut observer: F,
) -> (DistanceMatrix, RelaxStats)
where
    F: FnMut(&IterationView<'_>),
{
    let n = m.n();
    let mut out = m.clone();
    let mut adj = DynAdjacency::from_matrix(m);
    let mut stats = RelaxStats::with_capacity(n);
    let mut processed = vec![false; n];

    for step in 0..n {
        let k = match strategy {
            OrderingStrategy::NaturalOrder => step,
            OrderingStrategy::MinInOutProduct => select_min_product(&adj, &processed),
        };
        processed[k] = true;

        // in(k) and out(k) cannot change during iteration k: a new pair (i, j)
        // has i ∈ in(k) and j ∈ out(k), so neither endpoint is k.
        let (incoming, outgoing) = adj.take_lists(k);
        let (mut attempts, mut successes, mut useless) = (0u64, 0u64, 0u64);
        {
            let cells = out.raw_mut();
            let row_k = k * n;
            for &i in &incoming {
                let row_i = i * n;
                let dik = cells[row_i + k];
                for &j in &outgoing {
                    let dkj = cells[row_k + j];
                    attempts += 1;
                    if dik == INF_RAW || dkj == INF_RAW {
                        useless += 1;
                        continue;
                    }
                    let candidate = (dik + dkj).max(NEG_FLOOR);
                    let dij = cells[row_i + j];
                    if candidate < dij {
                        if dij == INF_RAW {
                            adj.append(i, j);
                        }
                        cells[row_i + j] = candidate;
                        successes += 1;
                    }
                }
            }
        }
        let lists_at_start = (incoming.len(), outgoing.len());
        adj.restore_lists(k, incoming, outgoing);

        stats.record_iteration(k, attempts, successes, useless);
        observer(&IterationView {
            step,
            vertex: k,
            attempts,
            successes,
            useless,
            lists_at_start: Some(lists_at_start),
            matrix: &out,
            adjacency: Some(&adj),
        });
    }
    (out, stats)
}

/// Linear scan for the unprocessed vertex with the smallest degree product;
/// the strict comparison keeps the lowest id among ties.
fn select_min_product(adj: &DynAdjacency, processed: &[bool]) -> usize {
    let mut best = None;
    let mut best_product = u64::MAX;
    for (v, &done) in processed.iter().enumerate() {
        if done {
            continue;
        }
        let product = adj.degree_product(v);
        if best.is_none() || product < best_product {
            best = Some(v);
            best_product = product;
        }
    }
    best.expect("select_min_product called with every vertex processed")
}

/// Lowest vertex whose diagonal cell is negative, if any. Applied to the output
/// of either Floyd-Warshall variant this detects a negative cycle.
pub fn detect_negative_cycle(m: &DistanceMatrix) -> Option<usize> {
    m.diagonal().position(|d| d < 0)
}
