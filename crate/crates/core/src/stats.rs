use serde::Serialize;

/// Relaxation counters collected by the Floyd-Warshall variants.
///
/// An *attempt* is one evaluation of `d[i][k] + d[k][j] < d[i][j]`; a
/// *success* is an attempt that lowered `d[i][j]`. An attempt is *useless*
/// when either operand is infinite, since it can never succeed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelaxStats {
    pub attempts_total: u64,
    pub successes_total: u64,
    pub useless_attempts: u64,
    /// One entry per outer-loop iteration, in processing order.
    pub attempts_per_iteration: Vec<u64>,
    pub successes_per_iteration: Vec<u64>,
    /// Intermediate vertices (0-based) in the order they were processed.
    pub k_order: Vec<usize>,
}

impl RelaxStats {
    pub(crate) fn with_capacity(n: usize) -> Self {
        RelaxStats {
            attempts_per_iteration: Vec::with_capacity(n),
            successes_per_iteration: Vec::with_capacity(n),
            k_order: Vec::with_capacity(n),
            ..Default::default()
        }
    }

    pub(crate) fn record_iteration(&mut self, k: usize, attempts: u64, successes: u64, useless: u64) {
        self.k_order.push(k);
        self.attempts_per_iteration.push(attempts);
        self.successes_per_iteration.push(successes);
        self.attempts_total += attempts;
        self.successes_total += successes;
        self.useless_attempts += useless;
    }

    /// `k_order` with 1-based vertex ids, as used in files and logs.
    pub fn k_order_one_based(&self) -> Vec<usize> {
        self.k_order.iter().map(|k| k + 1).collect()
    }

    /// Checks the internal accounting: totals equal the per-iteration sums,
    /// successes never exceed attempts, and `k_order` is a permutation of `0..n`.
    pub fn check_consistency(&self, n: usize) -> Result<(), String> {
        let sum: u64 = self.attempts_per_iteration.iter().sum();
        if sum != self.attempts_total {
            return Err(format!("attempts_total {} != per-iteration sum {sum}", self.attempts_total));
        }
        let sum: u64 = self.successes_per_iteration.iter().sum();
        if sum != self.successes_total {
            return Err(format!("successes_total {} != per-iteration sum {sum}", self.successes_total));
        }
        if self.successes_total > self.attempts_total {
            return Err("more successes than attempts".into());
        }
        if self.useless_attempts > self.attempts_total {
            return Err("more useless attempts than attempts".into());
        }
        let mut seen = vec![false; n];
        if self.k_order.len() != n {
            return Err(format!("k_order has {} entries for {n} vertices", self.k_order.len()));
        }
        for &k in &self.k_order {
            if k >= n || std::mem::replace(&mut seen[k], true) {
                return Err(format!("k_order is not a permutation: {:?}", self.k_order));
            }
        }
        Ok(())
    }
}
