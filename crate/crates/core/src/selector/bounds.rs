//! Closed-form upper bounds on the size of a smallest rich set.

use num_bigint::BigInt;

use super::TargetRatio;
use crate::numeric::{ceil_div, Rational};

/// `(d - 1) + ceil((pN - d + 1) / q)`.
///
/// For `a = 1` this is `N`; for `a = 0` it is `0`. It can exceed `N` when
/// `N` is small relative to `d`.
pub fn upper_bound_f(n: usize, d: usize, ratio: TargetRatio) -> usize {
    let s = d as i128 - 1;
    let num = ratio.p() as i128 * n as i128 - s;
    let f = s + ceil_div(num, ratio.q() as i128).expect("ratio denominator is positive");
    // f >= s + (-s)/q >= 0 because s >= 0 and q >= 1.
    f as usize
}

/// `aN + 2d`.
pub fn sw_bound(n: usize, d: usize, ratio: TargetRatio) -> Rational {
    ratio.as_rational() * Rational::from_integer(BigInt::from(n))
        + Rational::from_integer(BigInt::from(2 * d))
}

/// `(p/q)N + (p(q - p)/q)d`.
pub fn alon_bound(n: usize, d: usize, ratio: TargetRatio) -> Rational {
    let (p, q) = (BigInt::from(ratio.p()), BigInt::from(ratio.q()));
    let linear = Rational::new(&p * BigInt::from(n), q.clone());
    let slack = Rational::new(&p * (&q - &p) * BigInt::from(d), q);
    linear + slack
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn ratio(p: u64, q: u64) -> TargetRatio {
        TargetRatio::new(p, q).unwrap()
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound_f(10, 3, ratio(1, 2)), 6);
        assert_eq!(upper_bound_f(7, 4, ratio(0, 1)), 0);
        assert_eq!(upper_bound_f(7, 4, ratio(1, 1)), 7);
        assert_eq!(upper_bound_f(4, 2, ratio(1, 3)), 2);
        // N < d can push the bound above N.
        assert_eq!(upper_bound_f(2, 5, ratio(1, 2)), 3);
    }

    #[test]
    fn comparison_bound_examples() {
        assert_eq!(sw_bound(10, 3, ratio(1, 2)), int(11));
        assert_eq!(sw_bound(1, 1, ratio(0, 1)), int(2));
        assert_eq!(sw_bound(12, 2, ratio(1, 3)), int(8));
        assert_eq!(alon_bound(10, 3, ratio(1, 2)), rat(13, 2));
        assert_eq!(alon_bound(9, 4, ratio(0, 1)), int(0));
        assert_eq!(alon_bound(6, 2, ratio(2, 3)), rat(16, 3));
    }

    #[test]
    fn bound_is_nondecreasing_in_n() {
        for q in 1..=9u64 {
            for p in 0..=q {
                let Ok(r) = TargetRatio::new(p, q) else {
                    continue;
                };
                for d in 1..=6 {
                    let mut prev = upper_bound_f(1, d, r);
                    for n in 2..=60 {
                        let f = upper_bound_f(n, d, r);
                        assert!(f >= prev, "p={p} q={q} d={d} n={n}");
                        prev = f;
                    }
                }
            }
        }
    }
}
