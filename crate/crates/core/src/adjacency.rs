//! Append-only incoming/outgoing neighbor lists over the finite cells of a
//! distance matrix.

use crate::matrix::{DistanceMatrix, INF_RAW};

/// Per-vertex predecessor and successor lists.
///
/// `j` is in `outgoing(i)` exactly when `i` is in `incoming(j)`, and that holds
/// exactly when cell `(i, j)` is finite and `i != j`. Lists only grow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynAdjacency {
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl DynAdjacency {
    /// Lists for the finite off-diagonal cells of `m`, filled by a row-major scan.
    pub fn from_matrix(m: &DistanceMatrix) -> Self {
        let n = m.n();
        let mut adj = DynAdjacency { incoming: vec![Vec::new(); n], outgoing: vec![Vec::new(); n] };
        let cells = m.raw();
        for i in 0..n {
            for j in 0..n {
                if i != j && cells[i * n + j] != INF_RAW {
                    adj.append(i, j);
                }
            }
        }
        adj
    }

    pub fn n(&self) -> usize {
        self.incoming.len()
    }

    pub fn incoming(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    pub fn outgoing(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    /// `|in(v)| * |out(v)|`: the number of relaxation attempts an iteration
    /// through `v` would make right now.
    #[inline]
    pub fn degree_product(&self, v: usize) -> u64 {
        self.incoming[v].len() as u64 * self.outgoing[v].len() as u64
    }

    /// Total entries across all incoming lists (equal to the outgoing total).
    pub fn total_entries(&self) -> usize {
        self.incoming.iter().map(Vec::len).sum()
    }

    pub fn total_outgoing_entries(&self) -> usize {
        self.outgoing.iter().map(Vec::len).sum()
    }

    /// Checks duplicate-freedom, absence of self-loops and the mirror property.
    /// Returns a description of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.n();
        let mut out_marks = vec![false; n * n];
        let mut in_marks = vec![false; n * n];
        for v in 0..n {
            for &j in &self.outgoing[v] {
                if j == v {
                    return Err(format!("vertex {v} lists itself as successor"));
                }
                if std::mem::replace(&mut out_marks[v * n + j], true) {
                    return Err(format!("duplicate successor {j} of {v}"));
                }
            }
            for &i in &self.incoming[v] {
                if i == v {
                    return Err(format!("vertex {v} lists itself as predecessor"));
                }
                if std::mem::replace(&mut in_marks[i * n + v], true) {
                    return Err(format!("duplicate predecessor {i} of {v}"));
                }
            }
        }
        match out_marks.iter().zip(&in_marks).position(|(a, b)| a != b) {
            Some(idx) => Err(format!("mirror property broken for pair ({}, {})", idx / n, idx % n)),
            None => Ok(()),
        }
    }

    /// Records the new pair `(i, j)`. The caller guarantees it is not already present.
    #[inline]
    pub(crate) fn append(&mut self, i: usize, j: usize) {
        self.outgoing[i].push(j);
        self.incoming[j].push(i);
    }

    pub(crate) fn take_lists(&mut self, v: usize) -> (Vec<usize>, Vec<usize>) {
        (std::mem::take(&mut self.incoming[v]), std::mem::take(&mut self.outgoing[v]))
    }

    pub(crate) fn restore_lists(&mut self, v: usize, incoming: Vec<usize>, outgoing: Vec<usize>) {
        assert!(
            self.incoming[v].is_empty() && self.outgoing[v].is_empty(),
            "lists of vertex {v} grew while it was the intermediate vertex"
        );
        self.incoming[v] = incoming;
        self.outgoing[v] = outgoing;
    }
}
