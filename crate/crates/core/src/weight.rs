//! Extended-integer edge weights.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// Largest magnitude accepted for a finite weight at load time.
///
/// With at most 2^20 vertices every simple-path sum stays within 2^60, far
/// from the 64-bit limits.
pub const MAX_ABS_WEIGHT: i64 = 1 << 40;

/// A path length: either a finite signed integer or positive infinity.
///
/// Infinity is absorbing under addition and compares greater than every
/// finite value. The variant order matters: the derived `Ord` places every
/// `Finite` below `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(i64),
    Infinity,
}

impl Weight {
    pub const ZERO: Weight = Weight::Finite(0);

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        matches!(self, Weight::Infinity)
    }

    /// The finite value, if any.
    #[inline]
    pub fn finite(self) -> Option<i64> {
        match self {
            Weight::Finite(v) => Some(v),
            Weight::Infinity => None,
        }
    }

    /// Whether a finite weight lies within [`MAX_ABS_WEIGHT`]. Infinity is in bounds.
    pub fn within_load_bound(self) -> bool {
        match self {
            Weight::Finite(v) => v.unsigned_abs() <= MAX_ABS_WEIGHT as u64,
            Weight::Infinity => true,
        }
    }
}

/// Sum of two weights; infinity absorbs.
#[inline]
pub fn weight_add(a: Weight, b: Weight) -> Weight {
    match (a, b) {
        (Weight::Finite(x), Weight::Finite(y)) => Weight::Finite(x + y),
        _ => Weight::Infinity,
    }
}

impl Add for Weight {
    type Output = Weight;

    #[inline]
    fn add(self, rhs: Weight) -> Weight {
        weight_add(self, rhs)
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Self {
        Weight::Finite(v)
    }
}

impl PartialEq<i64> for Weight {
    fn eq(&self, other: &i64) -> bool {
        *self == Weight::Finite(*other)
    }
}

impl PartialOrd<i64> for Weight {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Weight::Finite(*other)))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(v) => write!(f, "{v}"),
            Weight::Infinity => f.write_str("INF"),
        }
    }
}
