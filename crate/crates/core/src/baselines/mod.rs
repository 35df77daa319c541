//! Comparison baselines: Dijkstra (binary heap with decrease-key), Bellman-Ford
//! and Johnson's reweighting, all over adjacency lists.

mod bellman_ford;
mod dijkstra;
mod heap;
mod johnson;

use std::ops::AddAssign;

use serde::Serialize;

use crate::graph::EdgeListGraph;
use crate::weight::Weight;

pub use bellman_ford::bellman_ford;
pub use dijkstra::{dijkstra_apsp, dijkstra_apsp_parallel, dijkstra_sssp};
pub use heap::IndexedMinHeap;
pub use johnson::{compute_potentials, johnson, johnson_parallel, Potentials};

/// Outgoing adjacency lists with finite weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyListGraph {
    out: Vec<Vec<(usize, i64)>>,
}

impl AdjacencyListGraph {
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn m(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, i64)] {
        &self.out[v]
    }

    /// All edges as `(src, dst, weight)`, grouped by source.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, list)| list.iter().map(move |&(v, w)| (u, v, w)))
    }

    /// First edge with a negative weight.
    pub fn negative_edge(&self) -> Option<(usize, usize, i64)> {
        self.edges().find(|&(_, _, w)| w < 0)
    }

    pub(crate) fn from_lists(out: Vec<Vec<(usize, i64)>>) -> Self {
        AdjacencyListGraph { out }
    }
}

impl From<&EdgeListGraph> for AdjacencyListGraph {
    fn from(g: &EdgeListGraph) -> Self {
        let mut out = vec![Vec::new(); g.n()];
        for e in g.edges() {
            out[e.src].push((e.dst, e.weight));
        }
        AdjacencyListGraph { out }
    }
}

/// Work done by a baseline run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub heap_pushes: u64,
    pub heap_pops: u64,
    pub decrease_keys: u64,
    /// Edges examined for relaxation (by Dijkstra or Bellman-Ford).
    pub edge_relaxations: u64,
}

impl OpCounts {
    /// Heap operations plus edge relaxations.
    pub fn total(&self) -> u64 {
        self.heap_pushes + self.heap_pops + self.decrease_keys + self.edge_relaxations
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.heap_pushes += rhs.heap_pushes;
        self.heap_pops += rhs.heap_pops;
        self.decrease_keys += rhs.decrease_keys;
        self.edge_relaxations += rhs.edge_relaxations;
    }
}

/// Single-source distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsspResult {
    pub source: usize,
    pub dist: Vec<Weight>,
    /// Vertices in the order their distances became final. Dijkstra only;
    /// empty for Bellman-Ford.
    pub settled: Vec<usize>,
    pub ops: OpCounts,
}
