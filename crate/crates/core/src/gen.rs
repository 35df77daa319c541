//! Seeded uniform random directed graphs, G(n, M).
//!
//! Edges are `M` distinct ordered pairs `(u, v)`, `u != v`, drawn uniformly
//! without replacement by a partial Fisher-Yates shuffle over the `n(n-1)`
//! pair indices. Pair index `p` maps to `u = p / (n-1)`, `r = p % (n-1)`,
//! `v = r + (r >= u)`. Each selected pair immediately draws its weight
//! uniformly from `[weight_min, weight_max]`. Edges are emitted sorted by
//! `(src, dst)`.
//!
//! The random stream is xoshiro256++ seeded from the 64-bit seed through
//! SplitMix64 (`rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64`). A bounded
//! draw in `[0, b)` uses Lemire's multiply-and-reject: take `x = next_u64()`,
//! form the 128-bit product `x * b`, reject while its low 64 bits are below
//! `2^64 mod b`, and return the high 64 bits. This pins the output bit for bit
//! across platforms.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::GenError;
use crate::graph::{Edge, EdgeListGraph};
use crate::weight::MAX_ABS_WEIGHT;

/// Edge-count families as functions of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    HalfN,
    N,
    TwoN,
    FourN,
    LgNN,
    TwoLgNN,
    FourLgNN,
    NOverLgNN,
    HalfNN,
}

impl Regime {
    /// Every regime, sparsest first.
    pub const ALL: [Regime; 9] = [
        Regime::HalfN,
        Regime::N,
        Regime::TwoN,
        Regime::FourN,
        Regime::LgNN,
        Regime::TwoLgNN,
        Regime::FourLgNN,
        Regime::NOverLgNN,
        Regime::HalfNN,
    ];

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Regime::HalfN => "n-half",
            Regime::N => "n",
            Regime::TwoN => "2n",
            Regime::FourN => "4n",
            Regime::LgNN => "lgn-n",
            Regime::TwoLgNN => "2lgn-n",
            Regime::FourLgNN => "4lgn-n",
            Regime::NOverLgNN => "n-over-lgn-n",
            Regime::HalfNN => "n-half-n",
        }
    }

    /// Column heading used in result tables.
    pub fn label(self) -> &'static str {
        match self {
            Regime::HalfN => "N/2",
            Regime::N => "N",
            Regime::TwoN => "2N",
            Regime::FourN => "4N",
            Regime::LgNN => "lgN.N",
            Regime::TwoLgNN => "2lgN.N",
            Regime::FourLgNN => "4lgN.N",
            Regime::NOverLgNN => "(N/lgN).N",
            Regime::HalfNN => "(N/2).N",
        }
    }

    /// Edge count for `n` vertices; see [`regime_edge_count`].
    pub fn edge_count(self, n: usize) -> usize {
        regime_edge_count(n, self)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Regime::ALL
            .into_iter()
            .find(|r| r.cli_name().eq_ignore_ascii_case(s) || r.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Regime::ALL.iter().map(|r| r.cli_name()).collect();
                format!("unknown regime `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// `⌈log2 n⌉` for `n >= 2`.
fn ceil_lg(n: usize) -> usize {
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// Number of edges of a density regime: `N/2, N, 2N, 4N, ⌈lg N⌉·N, 2⌈lg N⌉·N,
/// 4⌈lg N⌉·N, ⌈N/lg N⌉·N, (N/2)·N`, halves rounded up, clamped to `n(n-1)`.
pub fn regime_edge_count(n: usize, regime: Regime) -> usize {
    if n < 2 {
        return 0;
    }
    let lg = ceil_lg(n);
    let m = match regime {
        Regime::HalfN => n.div_ceil(2),
        Regime::N => n,
        Regime::TwoN => 2 * n,
        Regime::FourN => 4 * n,
        Regime::LgNN => lg * n,
        Regime::TwoLgNN => 2 * lg * n,
        Regime::FourLgNN => 4 * lg * n,
        Regime::NOverLgNN => n.div_ceil(lg) * n,
        Regime::HalfNN => (n * n).div_ceil(2),
    };
    m.min(n * (n - 1))
}

/// How many edges to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeCount {
    Regime(Regime),
    Exact(usize),
}

impl EdgeCount {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            EdgeCount::Regime(r) => r.edge_count(n),
            EdgeCount::Exact(m) => m,
        }
    }
}

/// Parameters of one random graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub edges: EdgeCount,
    pub weight_min: i64,
    pub weight_max: i64,
    pub seed: u64,
}

impl GenSpec {
    /// Default benchmark weight range.
    pub const DEFAULT_WEIGHTS: (i64, i64) = (1, 100);

    pub fn new(n: usize, edges: EdgeCount, seed: u64) -> Self {
        GenSpec { n, edges, weight_min: Self::DEFAULT_WEIGHTS.0, weight_max: Self::DEFAULT_WEIGHTS.1, seed }
    }

    pub fn with_weights(mut self, min: i64, max: i64) -> Self {
        self.weight_min = min;
        self.weight_max = max;
        self
    }

    pub fn m(&self) -> usize {
        self.edges.resolve(self.n)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::NoVertices);
        }
        let max = self.n * (self.n - 1);
        if self.m() > max {
            return Err(GenError::TooManyEdges { n: self.n, m: self.m(), max });
        }
        if self.weight_min > self.weight_max {
            return Err(GenError::EmptyWeightRange { min: self.weight_min, max: self.weight_max });
        }
        if self.weight_min < -MAX_ABS_WEIGHT || self.weight_max > MAX_ABS_WEIGHT {
            return Err(GenError::WeightRangeOutOfBounds { min: self.weight_min, max: self.weight_max });
        }
        Ok(())
    }

    /// The `gen ...` metadata comment written ahead of generated edge lists.
    pub fn metadata_comment(&self) -> String {
        format!("gen n={} m={} wmin={} wmax={} seed={}", self.n, self.m(), self.weight_min, self.weight_max, self.seed)
    }
}

/// Uniform integer in `[0, bound)`, `bound > 0`.
fn below(rng: &mut impl RngCore, bound: u64) -> u64 {
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let product = u128::from(rng.next_u64()) * u128::from(bound);
        if (product as u64) >= threshold {
            return (product >> 64) as u64;
        }
    }
}

/// Draws a graph according to `spec`; a deterministic function of the spec.
pub fn generate(spec: &GenSpec) -> Result<EdgeListGraph, GenError> {
    spec.validate()?;
    let n = spec.n;
    let m = spec.m();
    let total = (n * (n - 1)) as u64;
    let span = (spec.weight_max - spec.weight_min) as u64 + 1;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);

    // Sparse Fisher-Yates: `swapped` holds the displaced entries of the
    // conceptual identity array 0..total.
    let mut swapped: HashMap<u64, u64> = HashMap::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for t in 0..m as u64 {
        let r = t + below(&mut rng, total - t);
        let at_r = swapped.get(&r).copied().unwrap_or(r);
        let at_t = swapped.get(&t).copied().unwrap_or(t);
        swapped.insert(r, at_t);
        let weight = spec.weight_min + below(&mut rng, span) as i64;
        let (src, rem) = ((at_r / (n as u64 - 1)) as usize, (at_r % (n as u64 - 1)) as usize);
        let dst = if rem >= src { rem + 1 } else { rem };
        edges.push(Edge::new(src, dst, weight));
    }
    edges.sort_unstable();
    Ok(EdgeListGraph::new(n, edges).expect("sampled pairs are distinct and loop-free"))
}
