use super::{AdjacencyListGraph, OpCounts, SsspResult};
use crate::error::BaselineError;
use crate::matrix::{decode, INF_RAW};

/// Single-source shortest distances allowing negative weights.
///
/// Runs up to `n - 1` rounds over every edge, stopping early once a round
/// changes nothing, then one detection round. A negative cycle reachable from
/// `source` yields [`BaselineError::NegativeCycle`] naming a vertex on it.
pub fn bellman_ford(g: &AdjacencyListGraph, source: usize) -> Result<SsspResult, BaselineError> {
    let n = g.n();
    if source >= n {
        return Err(BaselineError::SourceOutOfRange { start: source, n });
    }
    let mut ops = OpCounts::default();
    let mut dist = vec![INF_RAW; n];
    let mut pred = vec![usize::MAX; n];
    dist[source] = 0;

    let mut converged = false;
    for _ in 1..n {
        let mut changed = false;
        for (u, v, w) in g.edges() {
            ops.edge_relaxations += 1;
            if dist[u] != INF_RAW && dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                pred[v] = u;
                changed = true;
            }
        }
        if !changed {
            converged = true;
            break;
        }
    }

    if !converged {
        for (u, v, w) in g.edges() {
            ops.edge_relaxations += 1;
            if dist[u] != INF_RAW && dist[u] + w < dist[v] {
                pred[v] = u;
                // v is reachable from the cycle; n steps back along the
                // predecessor chain land on it.
                let mut x = v;
                for _ in 0..n {
                    x = pred[x];
                }
                return Err(BaselineError::NegativeCycle { vertex: x });
            }
        }
    }

    Ok(SsspResult { source, dist: dist.into_iter().map(decode).collect(), settled: Vec::new(), ops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, EdgeListGraph};
    use crate::io::{parse_matrix, InfMode};
    use crate::weight::Weight;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> AdjacencyListGraph {
        let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
        AdjacencyListGraph::from(&EdgeListGraph::new(n, edges).unwrap())
    }

    fn on_cycle(cycle: &[usize], r: Result<SsspResult, BaselineError>) -> bool {
        matches!(r, Err(BaselineError::NegativeCycle { vertex }) if cycle.contains(&vertex))
    }

    #[test]
    fn worked_example_row_four() {
        let m = parse_matrix(
            "5\n0 6 INF 5 INF\n2 0 3 -1 2\n-2 INF 0 2 INF\n-1 1 2 0 -1\n1 INF INF INF 0\n",
            InfMode::Canonical,
        )
        .unwrap();
        let g = AdjacencyListGraph::from(&EdgeListGraph::from_matrix(&m));
        let r = bellman_ford(&g, 3).unwrap();
        let expected: Vec<Weight> = [-1, 1, 2, 0, -1].into_iter().map(Weight::Finite).collect();
        assert_eq!(r.dist, expected);
    }

    #[test]
    fn two_cycle_is_negative() {
        let g = graph(2, &[(0, 1, 1), (1, 0, -3)]);
        assert!(on_cycle(&[0, 1], bellman_ford(&g, 0)));
    }

    #[test]
    fn witness_lies_on_cycle_not_on_tail() {
        // 0 -> 1 -> 2 -> 3 -> 1 with cycle 1-2-3 of weight -1
        let g = graph(4, &[(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 1, -3)]);
        assert!(on_cycle(&[1, 2, 3], bellman_ford(&g, 0)));
    }

    #[test]
    fn unreachable_cycle_is_ignored() {
        let g = graph(3, &[(1, 2, 1), (2, 1, -3)]);
        let r = bellman_ford(&g, 0).unwrap();
        assert_eq!(r.dist, vec![Weight::Finite(0), Weight::Infinity, Weight::Infinity]);
    }

    #[test]
    fn single_vertex() {
        assert_eq!(bellman_ford(&graph(1, &[]), 0).unwrap().dist, vec![Weight::Finite(0)]);
    }

    #[test]
    fn result_is_a_fixed_point() {
        let g = graph(5, &[(0, 1, 4), (0, 2, 2), (2, 1, -1), (1, 3, 3), (3, 4, -2), (2, 4, 7)]);
        let d = bellman_ford(&g, 0).unwrap().dist;
        for (u, v, w) in g.edges() {
            assert!(!(d[u].is_finite() && d[u] + Weight::Finite(w) < d[v]));
        }
    }
}
