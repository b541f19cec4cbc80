//! Instances, target ratios and the subset selector.
//!
//! A set of indices `I` is *rich* for the ratio `a = p/q` when
//! `sum_{i in I} u_i >= a * w` coordinatewise, where `w` is the sum of all
//! vectors. [`select_rich_subset`] always finds a rich set with at most
//! `(d - 1) + ceil((pN - d + 1) / q)` elements.

mod bounds;
mod purify;
mod recursion;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{invalid, Error, Result};
use crate::numeric::{vec_geq, RatVec, Rational};

pub use bounds::{alon_bound, sw_bound, upper_bound_f};
pub use purify::{purify, PurifiedPoint};
pub use recursion::{select_rich_subset, CaseTag, Selection, TraceStep};

/// `N` nonnegative vectors of a common dimension `d`, with their cached sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    d: usize,
    vectors: Vec<RatVec>,
    total: RatVec,
}

impl Instance {
    pub fn new(d: usize, vectors: Vec<RatVec>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Validation("dimension d must be at least 1".into()));
        }
        if vectors.is_empty() {
            return Err(Error::Validation(
                "instance needs at least one vector".into(),
            ));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.dim() != d {
                return Err(Error::Validation(format!(
                    "vector {i} has dimension {}, expected {d}",
                    v.dim()
                )));
            }
            if let Some(j) = v.iter().position(|x| x.is_negative()) {
                return Err(Error::Validation(format!(
                    "vector {i} coordinate {j} is negative ({})",
                    v[j]
                )));
            }
        }
        let total = RatVec::sum(d, &vectors);
        Ok(Instance { d, vectors, total })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[RatVec] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &RatVec {
        &self.vectors[i]
    }

    pub fn total(&self) -> &RatVec {
        &self.total
    }

    /// Exact sum of the vectors at `indices`. Panics on an out-of-range index.
    pub fn subset_sum(&self, indices: &[usize]) -> RatVec {
        RatVec::sum(self.d, indices.iter().map(|&i| &self.vectors[i]))
    }

    /// Copy of the instance with vectors reordered so that position `k` holds
    /// the original vector `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Instance> {
        let mut seen = vec![false; self.n()];
        for &i in order {
            if i >= self.n() || std::mem::replace(&mut seen[i], true) {
                return invalid("permutation must list every index exactly once");
            }
        }
        if order.len() != self.n() {
            return invalid("permutation must list every index exactly once");
        }
        Instance::new(
            self.d,
            order.iter().map(|&i| self.vectors[i].clone()).collect(),
        )
    }
}

/// The ratio `a = p/q` in lowest terms, `0 <= p <= q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TargetRatio {
    p: u64,
    q: u64,
}

impl TargetRatio {
    /// Reduces `p/q` to lowest terms; rejects `q = 0` and `p > q`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Validation(
                "ratio denominator must be positive".into(),
            ));
        }
        if p > q {
            return Err(Error::Validation(format!("ratio {p}/{q} exceeds 1")));
        }
        let g = p.gcd(&q);
        Ok(TargetRatio { p: p / g, q: q / g })
    }

    pub fn from_rational(a: &Rational) -> Result<Self> {
        if a.is_negative() {
            return Err(Error::Validation(format!("ratio {a} is negative")));
        }
        let (Some(p), Some(q)) = (a.numer().to_u64(), a.denom().to_u64()) else {
            return Err(Error::Validation(format!(
                "ratio {a} does not fit in 64 bits"
            )));
        };
        Self::new(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.p), BigInt::from(self.q))
    }
}

impl fmt::Display for TargetRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// `a * w`, the vector a rich set has to dominate.
pub fn target_vector(inst: &Instance, ratio: TargetRatio) -> RatVec {
    inst.total().scaled(&ratio.as_rational())
}

/// Whether `indices` is a rich set for `ratio`. Indices must be distinct and
/// in range.
pub fn is_rich(inst: &Instance, ratio: TargetRatio, indices: &[usize]) -> Result<bool> {
    check_index_set(inst.n(), indices)?;
    let sum = inst.subset_sum(indices);
    vec_geq(&sum, &target_vector(inst, ratio))
}

pub(crate) fn check_index_set(n: usize, indices: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &i in indices {
        if i >= n {
            return invalid(format!("index {i} out of range for {n} vectors"));
        }
        if std::mem::replace(&mut seen[i], true) {
            return invalid(format!("index {i} listed twice"));
        }
    }
    Ok(())
}

/// Rich-set test on a sub-collection given by original indices `view`, with
/// the sum over `view` playing the role of the total.
pub(crate) fn is_rich_within(
    inst: &Instance,
    view: &[usize],
    ratio: TargetRatio,
    chosen: &[usize],
) -> bool {
    let total = inst.subset_sum(view);
    let target = total.scaled(&ratio.as_rational());
    let sum = inst.subset_sum(chosen);
    sum.iter().zip(target.iter()).all(|(s, t)| s >= t)
}
