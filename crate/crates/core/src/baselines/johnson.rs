use super::dijkstra::{apsp_parallel_unchecked, apsp_unchecked};
use super::{bellman_ford, AdjacencyListGraph, OpCounts};
use crate::error::BaselineError;
use crate::matrix::{DistanceMatrix, INF_RAW};
use crate::weight::Weight;

/// Vertex potentials `h` with `w + h[u] - h[v] >= 0` for every edge `(u, v, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potentials {
    pub h: Vec<i64>,
}

impl Potentials {
    /// The graph with every edge reweighted to `w + h[u] - h[v]`.
    pub fn reweight(&self, g: &AdjacencyListGraph) -> AdjacencyListGraph {
        let out =
            (0..g.n()).map(|u| g.neighbors(u).iter().map(|&(v, w)| (v, w + self.h[u] - self.h[v])).collect()).collect();
        AdjacencyListGraph::from_lists(out)
    }
}

/// Bellman-Ford from a virtual source (index `n`) joined to every vertex by a
/// zero-weight edge.
pub fn compute_potentials(g: &AdjacencyListGraph) -> Result<(Potentials, OpCounts), BaselineError> {
    let n = g.n();
    let mut out: Vec<Vec<(usize, i64)>> = (0..n).map(|u| g.neighbors(u).to_vec()).collect();
    out.push((0..n).map(|v| (v, 0)).collect());
    let augmented = AdjacencyListGraph::from_lists(out);
    let r = bellman_ford(&augmented, n)?;
    let h = r.dist[..n].iter().map(|d| d.finite().expect("the virtual source reaches every vertex")).collect();
    Ok((Potentials { h }, r.ops))
}

/// All-pairs shortest distances via Johnson's reweighting and one Dijkstra run
/// per source.
pub fn johnson(g: &AdjacencyListGraph) -> Result<(DistanceMatrix, OpCounts), BaselineError> {
    johnson_with(g, apsp_unchecked)
}

/// [`johnson`] with the Dijkstra phase spread over the rayon thread pool.
pub fn johnson_parallel(g: &AdjacencyListGraph) -> Result<(DistanceMatrix, OpCounts), BaselineError> {
    johnson_with(g, apsp_parallel_unchecked)
}

fn johnson_with(
    g: &AdjacencyListGraph,
    dijkstra_phase: fn(&AdjacencyListGraph) -> (DistanceMatrix, OpCounts),
) -> Result<(DistanceMatrix, OpCounts), BaselineError> {
    let (potentials, mut ops) = compute_potentials(g)?;
    let reweighted = potentials.reweight(g);
    assert!(reweighted.negative_edge().is_none(), "reweighting left a negative edge: {:?}", reweighted.negative_edge());
    let (mut m, dijkstra_ops) = dijkstra_phase(&reweighted);
    ops += dijkstra_ops;

    let n = g.n();
    let h = &potentials.h;
    for (u, row) in m.raw_mut().chunks_exact_mut(n).enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            if *cell != INF_RAW {
                *cell = *cell - h[u] + h[v];
            }
        }
    }
    debug_assert!(m.diagonal().all(|d| d == Weight::ZERO));
    Ok((m, ops))
}
