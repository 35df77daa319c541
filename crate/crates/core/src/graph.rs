//! Edge-list graph representation.

use std::collections::HashSet;

use crate::error::GraphError;
use crate::matrix::DistanceMatrix;
use crate::weight::Weight;

/// A directed edge with a finite weight. Vertex ids are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: i64,
}

impl Edge {
    pub fn new(src: usize, dst: usize, weight: i64) -> Self {
        Edge { src, dst, weight }
    }
}

/// Vertex count plus a list of distinct directed edges without self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl EdgeListGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            for v in [e.src, e.dst] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.src == e.dst {
                return Err(GraphError::SelfLoop { vertex: e.src });
            }
            if !Weight::Finite(e.weight).within_load_bound() {
                return Err(GraphError::WeightOutOfBounds { src: e.src, dst: e.dst, weight: Weight::Finite(e.weight) });
            }
            if !seen.insert((e.src, e.dst)) {
                return Err(GraphError::DuplicateEdge { src: e.src, dst: e.dst });
            }
        }
        Ok(EdgeListGraph { n, edges })
    }

    /// The finite off-diagonal cells of `m`, in row-major order.
    pub fn from_matrix(m: &DistanceMatrix) -> Self {
        let n = m.n();
        let edges = (0..n)
            .flat_map(|i| {
                m.row(i).enumerate().filter_map(move |(j, w)| match w {
                    Weight::Finite(v) if i != j => Some(Edge::new(i, j, v)),
                    _ => None,
                })
            })
            .collect();
        EdgeListGraph { n, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (M).
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_negative_edge(&self) -> bool {
        self.edges.iter().any(|e| e.weight < 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(EdgeListGraph::new(0, vec![]), Err(GraphError::Empty));
        assert_eq!(EdgeListGraph::new(2, vec![Edge::new(1, 1, 3)]), Err(GraphError::SelfLoop { vertex: 1 }));
        assert_eq!(
            EdgeListGraph::new(2, vec![Edge::new(0, 1, 3), Edge::new(0, 1, 4)]),
            Err(GraphError::DuplicateEdge { src: 0, dst: 1 })
        );
        assert_eq!(
            EdgeListGraph::new(2, vec![Edge::new(0, 2, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(matches!(
            EdgeListGraph::new(2, vec![Edge::new(0, 1, -(1 << 41))]),
            Err(GraphError::WeightOutOfBounds { .. })
        ));
    }

    #[test]
    fn antiparallel_edges_are_distinct() {
        let g = EdgeListGraph::new(2, vec![Edge::new(0, 1, 1), Edge::new(1, 0, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(!g.has_negative_edge());
    }

    #[test]
    fn matrix_round_trip() {
        let g = EdgeListGraph::new(3, vec![Edge::new(0, 2, -4), Edge::new(1, 0, 7)]).unwrap();
        let m = DistanceMatrix::from_edge_list(&g);
        assert_eq!(EdgeListGraph::from_matrix(&m), g);
    }
}
