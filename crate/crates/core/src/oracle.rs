//! Ground truth for small instances: the exact minimum rich-set size by
//! exhaustive search, and the greedy optimum for scalars.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{invalid, Error, Result};
use crate::numeric::ceil_div;
use crate::selector::{upper_bound_f, Instance, Selection, TargetRatio};

/// Default cap on `N` for [`brute_min_rich`].
pub const DEFAULT_MAX_N: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub min_size: usize,
    /// Lexicographically least rich set of size `min_size`, ascending.
    pub witness: Vec<usize>,
    /// Number of subsets tested before the witness was found, inclusive.
    pub explored: u64,
}

/// Smallest rich set, searching sizes `0, 1, ...` and, within a size, index
/// sets in lexicographic order. The first hit is returned.
pub fn brute_min_rich(inst: &Instance, ratio: TargetRatio, max_n: usize) -> Result<OracleResult> {
    let n = inst.n();
    if n > max_n {
        return Err(Error::SizeLimit { n, max: max_n });
    }
    let scaled = ScaledInstance::new(inst, ratio);
    let found = match scaled.to_i128() {
        Some(small) => small.search(),
        None => scaled.search(),
    };
    found.ok_or_else(|| Error::Internal("the full index set is not rich".into()))
}

/// Instance scaled to integers: `rich(I)` iff `sum_{i in I} weights[i] >=
/// target` in every coordinate, with `weights = q * L * u` and
/// `target = p * L * w` for a per-coordinate common denominator `L`.
struct ScaledInstance<T> {
    d: usize,
    weights: Vec<Vec<T>>,
    target: Vec<T>,
}

impl ScaledInstance<BigInt> {
    fn new(inst: &Instance, ratio: TargetRatio) -> Self {
        let d = inst.d();
        let q = BigInt::from(ratio.q());
        let p = BigInt::from(ratio.p());
        let lcms: Vec<BigInt> = (0..d)
            .map(|j| {
                inst.vectors()
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v[j].denom()))
            })
            .collect();
        let weights: Vec<Vec<BigInt>> = inst
            .vectors()
            .iter()
            .map(|v| {
                (0..d)
                    .map(|j| &q * v[j].numer() * (&lcms[j] / v[j].denom()))
                    .collect()
            })
            .collect();
        let target = (0..d)
            .map(|j| &p * (inst.total()[j].clone() * &lcms[j]).to_integer())
            .collect();
        ScaledInstance { d, weights, target }
    }

    fn to_i128(&self) -> Option<ScaledInstance<i128>> {
        // Partial sums never exceed the sum of all weights.
        let mut totals = vec![BigInt::default(); self.d];
        for w in &self.weights {
            for (t, x) in totals.iter_mut().zip(w) {
                *t += x;
            }
        }
        totals.iter().try_for_each(|t| t.to_i128().map(drop))?;
        Some(ScaledInstance {
            d: self.d,
            weights: self
                .weights
                .iter()
                .map(|w| w.iter().map(|x| x.to_i128()).collect::<Option<_>>())
                .collect::<Option<_>>()?,
            target: self
                .target
                .iter()
                .map(|x| x.to_i128())
                .collect::<Option<_>>()?,
        })
    }
}

impl<T> ScaledInstance<T>
where
    T: Clone + Ord + Default + for<'a> AddAssign<&'a T>,
{
    fn search(&self) -> Option<OracleResult> {
        let n = self.weights.len();
        let mut explored = 0u64;
        let mut chosen = Vec::with_capacity(n);
        let zero = vec![T::default(); self.d];
        for size in 0..=n {
            if self.first_of_size(0, size, &zero, &mut chosen, &mut explored) {
                return Some(OracleResult {
                    min_size: size,
                    witness: chosen,
                    explored,
                });
            }
        }
        None
    }

    /// Depth-first over increasing index sequences, which visits the
    /// `size`-subsets in lexicographic order.
    fn first_of_size(
        &self,
        start: usize,
        remaining: usize,
        acc: &[T],
        chosen: &mut Vec<usize>,
        explored: &mut u64,
    ) -> bool {
        if remaining == 0 {
            *explored += 1;
            return acc.iter().zip(&self.target).all(|(s, t)| s >= t);
        }
        let n = self.weights.len();
        for i in start..=n - remaining {
            let mut next = acc.to_vec();
            for (s, x) in next.iter_mut().zip(&self.weights[i]) {
                *s += x;
            }
            chosen.push(i);
            if self.first_of_size(i + 1, remaining - 1, &next, chosen, explored) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// The `ceil(pN/q)` largest scalars of a one-dimensional instance, ties broken
/// toward smaller indices. Always rich, and of size exactly the bound.
pub fn greedy_top_k(inst: &Instance, ratio: TargetRatio) -> Result<Selection> {
    if inst.d() != 1 {
        return invalid(format!("greedy_top_k needs d = 1, got d = {}", inst.d()));
    }
    let n = inst.n();
    let k = ceil_div(ratio.p() as i128 * n as i128, ratio.q() as i128)?
        .to_usize()
        .expect("ceil(pN/q) lies in [0, N]");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inst.vector(b)[0].cmp(&inst.vector(a)[0]).then(a.cmp(&b)));
    let mut indices = order[..k].to_vec();
    indices.sort_unstable();
    let sum = inst.subset_sum(&indices);
    Ok(Selection {
        indices,
        sum,
        bound_f: upper_bound_f(n, 1, ratio),
        trace: Vec::new(),
    })
}
