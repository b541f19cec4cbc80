//! Seeded random instances for test corpora.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::numeric::{RatVec, Rational};
use crate::selector::Instance;

/// Each coordinate is zero with probability `zero_density`, otherwise
/// `num/den` with both drawn uniformly from `1..=max_denominator`. The same
/// arguments always produce the same instance.
pub fn random_instance(
    seed: u64,
    n: usize,
    d: usize,
    max_denominator: u64,
    zero_density: &Rational,
) -> Result<Instance> {
    if n == 0 || d == 0 || max_denominator == 0 {
        return invalid("random_instance needs N, d and max_denominator positive");
    }
    if zero_density.is_negative() || *zero_density > Rational::one() {
        return invalid(format!("zero density {zero_density} lies outside [0, 1]"));
    }
    let (Some(zero_num), Some(zero_den)) =
        (zero_density.numer().to_u64(), zero_density.denom().to_u64())
    else {
        return invalid("zero density does not fit in 64 bits");
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors = (0..n)
        .map(|_| {
            RatVec::new(
                (0..d)
                    .map(|_| {
                        if rng.gen_range(0..zero_den) < zero_num {
                            Rational::zero()
                        } else {
                            let num = rng.gen_range(1..=max_denominator);
                            let den = rng.gen_range(1..=max_denominator);
                            Rational::new(BigInt::from(num), BigInt::from(den))
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Instance::new(d, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn same_seed_same_instance() {
        let a = random_instance(1, 5, 2, 10, &int(0)).unwrap();
        let b = random_instance(1, 5, 2, 10, &int(0)).unwrap();
        assert_eq!(a, b);
        assert!(a
            .vectors()
            .iter()
            .flat_map(|v| v.iter())
            .all(|x| *x > int(0)));
    }

    #[test]
    fn full_zero_density() {
        let inst = random_instance(3, 6, 3, 10, &int(1)).unwrap();
        assert!(inst.total().is_zero());
    }

    #[test]
    fn different_seeds_are_valid() {
        let a = random_instance(1, 5, 2, 10, &rat(1, 4)).unwrap();
        let b = random_instance(2, 5, 2, 10, &rat(1, 4)).unwrap();
        assert_eq!((a.n(), a.d()), (b.n(), b.d()));
        assert!(a.vectors().iter().all(RatVec::is_nonnegative));
    }

    #[test]
    fn bad_parameters() {
        assert!(random_instance(1, 0, 2, 10, &int(0)).is_err());
        assert!(random_instance(1, 2, 0, 10, &int(0)).is_err());
        assert!(random_instance(1, 2, 2, 0, &int(0)).is_err());
        assert!(random_instance(1, 2, 2, 10, &rat(3, 2)).is_err());
        assert!(random_instance(1, 2, 2, 10, &int(-1)).is_err());
    }
}
