//! Dense N×N distance matrix.

use std::fmt;

use crate::error::GraphError;
use crate::graph::EdgeListGraph;
use crate::weight::Weight;

/// Storage encoding of [`Weight::Infinity`]. Twice this value still fits in
/// an `i64`, so the relaxation loops can add two raw cells unconditionally.
pub(crate) const INF_RAW: i64 = i64::MAX / 2;

/// Lowest finite value a relaxation may write. Only reachable on inputs with
/// negative cycles, where repeated relaxation drives values down without bound.
pub(crate) const NEG_FLOOR: i64 = -(1 << 61);

#[inline]
pub(crate) fn encode(w: Weight) -> i64 {
    match w {
        Weight::Finite(v) => {
            debug_assert!((NEG_FLOOR..INF_RAW).contains(&v), "weight {v} outside storable range");
            v
        }
        Weight::Infinity => INF_RAW,
    }
}

#[inline]
pub(crate) fn decode(raw: i64) -> Weight {
    if raw == INF_RAW {
        Weight::Infinity
    } else {
        Weight::Finite(raw)
    }
}

/// Row-major N×N matrix of [`Weight`]s; cell `(i, j)` is the current distance
/// from vertex `i` to vertex `j` (0-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    cells: Vec<i64>,
}

impl DistanceMatrix {
    /// Matrix of `n` vertices with no edges: zero diagonal, infinity elsewhere.
    pub fn unconnected(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut cells = vec![INF_RAW; n * n];
        for i in 0..n {
            cells[i * n + i] = 0;
        }
        Ok(DistanceMatrix { n, cells })
    }

    /// Builds an input matrix from rows. Rows must be square, the diagonal must
    /// be zero and finite entries must respect [`crate::MAX_ABS_WEIGHT`].
    pub fn from_rows(rows: Vec<Vec<Weight>>) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut m = Self::unconnected(n)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::NotSquare { row: i, len: row.len(), n });
            }
            for (j, w) in row.into_iter().enumerate() {
                if i == j {
                    if w != Weight::ZERO {
                        return Err(GraphError::NonZeroDiagonal { vertex: i, weight: w });
                    }
                    continue;
                }
                if !w.within_load_bound() {
                    return Err(GraphError::WeightOutOfBounds { src: i, dst: j, weight: w });
                }
                m.cells[i * n + j] = encode(w);
            }
        }
        Ok(m)
    }

    /// Places every edge of `g`; all other off-diagonal cells are infinite.
    pub fn from_edge_list(g: &EdgeListGraph) -> Self {
        let mut m = Self::unconnected(g.n()).expect("edge-list graphs have n >= 1");
        for e in g.edges() {
            m.cells[e.src * m.n + e.dst] = e.weight;
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Weight {
        decode(self.cells[i * self.n + j])
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = Weight> + '_ {
        self.cells[i * self.n..(i + 1) * self.n].iter().map(|&c| decode(c))
    }

    pub fn rows(&self) -> Vec<Vec<Weight>> {
        (0..self.n).map(|i| self.row(i).collect()).collect()
    }

    pub fn diagonal(&self) -> impl Iterator<Item = Weight> + '_ {
        (0..self.n).map(|i| self.get(i, i))
    }

    /// Number of finite cells off the diagonal (the edge count of the graph the
    /// matrix describes).
    pub fn finite_off_diagonal(&self) -> usize {
        let n = self.n;
        self.cells.iter().enumerate().filter(|&(idx, &c)| idx / n != idx % n && c != INF_RAW).count()
    }

    pub fn has_infinity(&self) -> bool {
        self.cells.contains(&INF_RAW)
    }

    /// First cell (row-major) where the two matrices differ, with both values.
    pub fn first_difference(&self, other: &DistanceMatrix) -> Option<(usize, usize, Weight, Weight)> {
        assert_eq!(self.n, other.n, "matrices of different order");
        self.cells.iter().zip(&other.cells).position(|(a, b)| a != b).map(|idx| {
            let (i, j) = (idx / self.n, idx % self.n);
            (i, j, self.get(i, j), other.get(i, j))
        })
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, w: Weight) {
        self.cells[i * self.n + j] = encode(w);
    }

    pub(crate) fn raw(&self) -> &[i64] {
        &self.cells
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [i64] {
        &mut self.cells
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix({})", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).map(|w| w.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
