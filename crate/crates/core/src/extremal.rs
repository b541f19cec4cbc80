//! Instances on which no rich set is smaller than the general bound.
//!
//! Pick `r` in `[1, q - 1]` with `p r = 1 (mod q)` and `m = ceil(p r / q)`.
//! The instance consists of `r` copies of each unit vector `e_1, ..., e_{d-1}`
//! followed by `N - r(d - 1)` copies of `e_d`. Coordinates are integral, so a
//! rich set needs `m` vectors from each of the first `d - 1` blocks and
//! `ceil(p(N - r(d - 1)) / q)` from the tail.

use num_integer::Integer;

use crate::error::{internal, invalid, Error, Result};
use crate::numeric::{ceil_div, RatVec};
use crate::selector::{upper_bound_f, Instance, TargetRatio};

/// Inverse of `p` modulo `q`, in `[1, q - 1]`.
pub fn mod_inverse(p: u64, q: u64) -> Result<u64> {
    if q < 2 || p == 0 || p >= q {
        return invalid(format!("mod_inverse needs 1 <= p < q, got p={p}, q={q}"));
    }
    let egcd = (p as i128).extended_gcd(&(q as i128));
    if egcd.gcd != 1 {
        return invalid(format!("{p} has no inverse modulo {q}"));
    }
    Ok(egcd.x.rem_euclid(q as i128) as u64)
}

/// Parameters of one extremal instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub d: usize,
    pub n: usize,
    pub ratio: TargetRatio,
    /// Length of each unit-vector block.
    pub r: u64,
    /// Vectors a rich set must take from each block.
    pub m: u64,
}

impl ExtremalSpec {
    /// Requires `1 <= p < q` and `N >= r(d - 1)`.
    pub fn new(d: usize, n: usize, ratio: TargetRatio) -> Result<Self> {
        let (p, q) = (ratio.p(), ratio.q());
        if d == 0 || n == 0 {
            return invalid("extremal instance needs d >= 1 and N >= 1");
        }
        if p == 0 || p >= q {
            return invalid(format!("extremal instance needs 0 < a < 1, got {ratio}"));
        }
        let r = mod_inverse(p, q)?;
        let m = ceil_div((p * r) as i128, q as i128)? as u64;
        if q * m - p * r != q - 1 {
            return internal(format!("qm - pr != q - 1 for p={p}, q={q}, r={r}, m={m}"));
        }
        let rs = r as usize * (d - 1);
        if n < rs {
            return Err(Error::InvalidArgument(format!(
                "N = {n} is below r(d - 1) = {rs}"
            )));
        }
        Ok(ExtremalSpec { d, n, ratio, r, m })
    }

    pub fn block_len(&self) -> usize {
        self.r as usize
    }

    /// Number of leading vectors that belong to the `e_1 .. e_{d-1}` blocks.
    pub fn blocks_len(&self) -> usize {
        self.block_len() * (self.d - 1)
    }

    /// Whether `N >= (q - 1)(d - 1)`, where equality with the bound is
    /// guaranteed.
    pub fn in_tight_range(&self) -> bool {
        self.n >= (self.ratio.q() as usize - 1) * (self.d - 1)
    }
}

/// Block `i` (0-based, `i < d - 1`) occupies positions `i r .. (i + 1) r`;
/// everything after is `e_d`.
pub fn extremal_instance(spec: &ExtremalSpec) -> Result<Instance> {
    let d = spec.d;
    let mut vectors = Vec::with_capacity(spec.n);
    for axis in 0..d - 1 {
        vectors.extend(std::iter::repeat_n(RatVec::unit(d, axis), spec.block_len()));
    }
    vectors.extend(std::iter::repeat_n(
        RatVec::unit(d, d - 1),
        spec.n - spec.blocks_len(),
    ));
    Instance::new(d, vectors)
}

fn tail_needed(spec: &ExtremalSpec) -> Result<usize> {
    let tail = (spec.n - spec.blocks_len()) as i128;
    Ok(ceil_div(spec.ratio.p() as i128 * tail, spec.ratio.q() as i128)? as usize)
}

/// `(d - 1) m + ceil(p(N - r(d - 1)) / q)`, checked against
/// [`upper_bound_f`].
pub fn extremal_min_size(spec: &ExtremalSpec) -> Result<usize> {
    let size = (spec.d - 1) * spec.m as usize + tail_needed(spec)?;
    let f = upper_bound_f(spec.n, spec.d, spec.ratio);
    if size != f {
        return internal(format!(
            "extremal size {size} differs from the bound {f} for {spec:?}"
        ));
    }
    Ok(size)
}

/// A rich set of size [`extremal_min_size`]: the first `m` vectors of every
/// block and the first vectors of the tail.
pub fn extremal_witness(spec: &ExtremalSpec) -> Result<Vec<usize>> {
    let r = spec.block_len();
    let mut out = Vec::new();
    for block in 0..spec.d - 1 {
        out.extend(block * r..block * r + spec.m as usize);
    }
    let start = spec.blocks_len();
    out.extend(start..start + tail_needed(spec)?);
    Ok(out)
}
