//! Pushes the uniform fractional selection to a point of the same polytope
//! with at most `d` fractional coordinates.
//!
//! The polytope is `{x in [0,1]^N : sum_i x_i u_i = a w}`. It contains
//! `x = (a, ..., a)`. While the columns `u_i` of the fractional coordinates
//! are linearly dependent, moving along a dependence keeps the equality and
//! the step is taken until some fractional coordinate lands on 0 or 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Instance, TargetRatio};
use crate::error::{internal, Result};
use crate::numeric::{integer_kernel, integer_rows, RatVec, Rational};

/// A point of the polytope with its coordinates partitioned by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurifiedPoint {
    pub coords: Vec<Rational>,
    /// Positions with `x_i = 0`, ascending.
    pub zero_set: Vec<usize>,
    /// Positions with `x_i = 1`, ascending.
    pub one_set: Vec<usize>,
    /// Positions with `0 < x_i < 1`, ascending. Their columns are linearly
    /// independent, so there are at most `d` of them.
    pub fractional_set: Vec<usize>,
    /// Number of pivot steps taken, never more than `N`.
    pub pivots: usize,
}

impl PurifiedPoint {
    fn from_coords(coords: Vec<Rational>, pivots: usize) -> Self {
        let mut zero_set = Vec::new();
        let mut one_set = Vec::new();
        let mut fractional_set = Vec::new();
        for (i, x) in coords.iter().enumerate() {
            if x.is_zero() {
                zero_set.push(i);
            } else if x.is_one() {
                one_set.push(i);
            } else {
                fractional_set.push(i);
            }
        }
        PurifiedPoint {
            coords,
            zero_set,
            one_set,
            fractional_set,
            pivots,
        }
    }
}

pub fn purify(inst: &Instance, ratio: TargetRatio) -> Result<PurifiedPoint> {
    let view: Vec<usize> = (0..inst.n()).collect();
    purify_view(inst, &view, ratio)
}

/// Purification restricted to the vectors `view` (original indices). The
/// returned coordinates are indexed by position in `view`.
pub(crate) fn purify_view(
    inst: &Instance,
    view: &[usize],
    ratio: TargetRatio,
) -> Result<PurifiedPoint> {
    let d = inst.d();
    let n = view.len();
    let columns: Vec<&RatVec> = view.iter().map(|&i| inst.vector(i)).collect();
    let rows = integer_rows(d, &columns);

    // x_i = num[i] / den throughout, starting from (p/q, ..., p/q). Since x
    // stays in [0, 1], the integral coordinates are exactly 0 and 1.
    let mut den = BigInt::from(ratio.q());
    let mut num = vec![BigInt::from(ratio.p()); n];
    let mut pivots = 0usize;
    loop {
        let fractional: Vec<usize> = (0..n)
            .filter(|&i| num[i].is_positive() && num[i] < den)
            .collect();
        // Any d + 1 columns are dependent. Leftmost pivoting gives the same
        // dependence on that prefix as on the whole fractional set.
        let probe = &fractional[..fractional.len().min(d + 1)];
        let sub: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| probe.iter().map(|&i| row[i].clone()).collect())
            .collect();
        let Some(dir) = integer_kernel(sub.clone(), probe.len()) else {
            if fractional.len() > d {
                return internal(format!(
                    "{} fractional columns reported independent in dimension {d}",
                    probe.len()
                ));
            }
            break;
        };

        // x moves along dir on the probe only, so the equality survives iff
        // the probe columns combine to zero under dir.
        if sub.iter().any(|row| !dot(row, &dir).is_zero()) {
            return internal(format!(
                "purification step {} broke the equality constraint",
                pivots + 1
            ));
        }

        // Largest step keeping every coordinate in [0, 1], as a fraction
        // room / |v| in units of 1/den; ties go to the smallest index.
        let mut step: Option<(BigInt, BigInt)> = None;
        for (&i, v) in probe.iter().zip(&dir) {
            let room = if v.is_positive() {
                &den - &num[i]
            } else if v.is_negative() {
                num[i].clone()
            } else {
                continue;
            };
            let cand = (room, v.abs());
            if step
                .as_ref()
                .is_none_or(|(sn, sd)| &cand.0 * sd < sn * &cand.1)
            {
                step = Some(cand);
            }
        }
        let (step_num, step_den) = step.expect("kernel vector is nonzero");

        // x_i + (step_num / step_den) v_i / den over the new denominator
        // den * step_den.
        if !step_den.is_one() {
            for x in num.iter_mut() {
                *x *= &step_den;
            }
            den *= &step_den;
        }
        for (&i, v) in probe.iter().zip(&dir) {
            num[i] += &step_num * v;
            if num[i].is_negative() || num[i] > den {
                return internal(format!(
                    "purification step {} left the unit cube",
                    pivots + 1
                ));
            }
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if !g.is_one() {
            for x in num.iter_mut() {
                *x /= &g;
            }
            den /= &g;
        }

        pivots += 1;
        if pivots > n {
            return internal(format!("purification exceeded {n} pivot steps"));
        }
    }

    if !satisfies_equality(&rows, &num, &den, ratio) {
        return internal("purified point violates the equality constraint");
    }
    let coords = num
        .into_iter()
        .map(|x| Rational::new(x, den.clone()))
        .collect();
    Ok(PurifiedPoint::from_coords(coords, pivots))
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `sum_i x_i u_i = (p/q) sum_i u_i` with `x = num / den`, row by row.
fn satisfies_equality(
    rows: &[Vec<BigInt>],
    num: &[BigInt],
    den: &BigInt,
    ratio: TargetRatio,
) -> bool {
    let (p, q) = (BigInt::from(ratio.p()), BigInt::from(ratio.q()));
    rows.iter().all(|row| {
        let lhs = &q * dot(row, num);
        let rhs = &p * den * row.iter().sum::<BigInt>();
        lhs == rhs
    })
}
