use rayon::prelude::*;

use super::{AdjacencyListGraph, IndexedMinHeap, OpCounts, SsspResult};
use crate::error::BaselineError;
use crate::matrix::{decode, DistanceMatrix, INF_RAW};

fn check_source(g: &AdjacencyListGraph, source: usize) -> Result<(), BaselineError> {
    if source >= g.n() {
        return Err(BaselineError::SourceOutOfRange { start: source, n: g.n() });
    }
    Ok(())
}

pub(super) fn check_non_negative(g: &AdjacencyListGraph) -> Result<(), BaselineError> {
    match g.negative_edge() {
        Some((src, dst, weight)) => Err(BaselineError::NegativeEdge { src, dst, weight }),
        None => Ok(()),
    }
}

/// Dijkstra from `source`. Writes distances (raw encoding) into `dist`, which
/// must have length `n`. `settled` receives the extraction order when given.
pub(super) fn run(
    g: &AdjacencyListGraph,
    source: usize,
    heap: &mut IndexedMinHeap,
    dist: &mut [i64],
    mut settled: Option<&mut Vec<usize>>,
) -> OpCounts {
    let mut ops = OpCounts::default();
    dist.fill(INF_RAW);
    heap.clear();
    dist[source] = 0;
    heap.push(source, 0);
    ops.heap_pushes += 1;

    while let Some((u, du)) = heap.pop_min() {
        ops.heap_pops += 1;
        if let Some(order) = settled.as_deref_mut() {
            order.push(u);
        }
        for &(v, w) in g.neighbors(u) {
            ops.edge_relaxations += 1;
            let candidate = du + w;
            if candidate < dist[v] {
                if dist[v] == INF_RAW {
                    heap.push(v, candidate);
                    ops.heap_pushes += 1;
                } else {
                    // v cannot have been settled: its distance would already be <= du.
                    heap.decrease_key(v, candidate);
                    ops.decrease_keys += 1;
                }
                dist[v] = candidate;
            }
        }
    }
    ops
}

/// Single-source shortest distances on a graph with non-negative weights.
pub fn dijkstra_sssp(g: &AdjacencyListGraph, source: usize) -> Result<SsspResult, BaselineError> {
    check_source(g, source)?;
    check_non_negative(g)?;
    let mut heap = IndexedMinHeap::new(g.n());
    let mut dist = vec![INF_RAW; g.n()];
    let mut settled = Vec::with_capacity(g.n());
    let ops = run(g, source, &mut heap, &mut dist, Some(&mut settled));
    Ok(SsspResult { source, dist: dist.into_iter().map(decode).collect(), settled, ops })
}

/// All pairs by running Dijkstra from every vertex, sequentially.
pub fn dijkstra_apsp(g: &AdjacencyListGraph) -> Result<(DistanceMatrix, OpCounts), BaselineError> {
    check_non_negative(g)?;
    Ok(apsp_unchecked(g))
}

pub(super) fn apsp_unchecked(g: &AdjacencyListGraph) -> (DistanceMatrix, OpCounts) {
    let n = g.n();
    let mut m = DistanceMatrix::unconnected(n).expect("graphs have n >= 1");
    let mut heap = IndexedMinHeap::new(n);
    let mut ops = OpCounts::default();
    for (source, row) in m.raw_mut().chunks_exact_mut(n).enumerate() {
        ops += run(g, source, &mut heap, row, None);
    }
    (m, ops)
}

/// [`dijkstra_apsp`] with sources distributed over the rayon thread pool.
pub fn dijkstra_apsp_parallel(g: &AdjacencyListGraph) -> Result<(DistanceMatrix, OpCounts), BaselineError> {
    check_non_negative(g)?;
    Ok(apsp_parallel_unchecked(g))
}

pub(super) fn apsp_parallel_unchecked(g: &AdjacencyListGraph) -> (DistanceMatrix, OpCounts) {
    let n = g.n();
    let mut m = DistanceMatrix::unconnected(n).expect("graphs have n >= 1");
    let ops = m
        .raw_mut()
        .par_chunks_exact_mut(n)
        .enumerate()
        .map_init(|| IndexedMinHeap::new(n), |heap, (source, row)| run(g, source, heap, row, None))
        .reduce(OpCounts::default, |mut a, b| {
            a += b;
            a
        });
    (m, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, EdgeListGraph};
    use crate::weight::Weight;

    const INF: Weight = Weight::Infinity;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> AdjacencyListGraph {
        let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
        AdjacencyListGraph::from(&EdgeListGraph::new(n, edges).unwrap())
    }

    #[test]
    fn path_graph() {
        let g = graph(3, &[(0, 1, 1), (1, 2, 2)]);
        let r = dijkstra_sssp(&g, 0).unwrap();
        assert_eq!(r.dist, vec![Weight::Finite(0), Weight::Finite(1), Weight::Finite(3)]);
        assert_eq!(r.settled, vec![0, 1, 2]);
    }

    #[test]
    fn unreachable_stays_infinite() {
        let g = graph(2, &[]);
        assert_eq!(dijkstra_sssp(&g, 0).unwrap().dist, vec![Weight::Finite(0), INF]);
    }

    #[test]
    fn decrease_key_is_used() {
        // 0->2 direct is worse than 0->1->2
        let g = graph(3, &[(0, 2, 10), (0, 1, 1), (1, 2, 1)]);
        let r = dijkstra_sssp(&g, 0).unwrap();
        assert_eq!(r.dist[2], Weight::Finite(2));
        assert_eq!(r.ops.decrease_keys, 1);
        assert_eq!(r.ops.heap_pushes, 3);
        assert_eq!(r.ops.heap_pops, 3);
        assert_eq!(r.ops.edge_relaxations, 3);
    }

    #[test]
    fn rejects_negative_edges_and_bad_sources() {
        let g = graph(2, &[(0, 1, 4), (1, 0, -1)]);
        assert_eq!(dijkstra_sssp(&g, 0), Err(BaselineError::NegativeEdge { src: 1, dst: 0, weight: -1 }));
        assert!(dijkstra_apsp(&g).is_err());
        let g = graph(2, &[]);
        assert_eq!(dijkstra_sssp(&g, 2), Err(BaselineError::SourceOutOfRange { start: 2, n: 2 }));
    }

    #[test]
    fn apsp_trivial_cases() {
        let (m, _) = dijkstra_apsp(&graph(1, &[])).unwrap();
        assert_eq!(m.rows(), vec![vec![Weight::Finite(0)]]);
        let (m, _) = dijkstra_apsp(&graph(3, &[])).unwrap();
        assert_eq!(m, DistanceMatrix::unconnected(3).unwrap());
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = graph(4, &[(0, 1, 3), (1, 2, 1), (2, 3, 4), (3, 0, 2), (0, 2, 9)]);
        assert_eq!(dijkstra_apsp(&g).unwrap(), dijkstra_apsp_parallel(&g).unwrap());
    }
}
