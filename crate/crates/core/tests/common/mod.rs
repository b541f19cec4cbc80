#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rich_subset::cli::random_instance;
use rich_subset::numeric::{int, rat, RatVec, Rational};
use rich_subset::{Instance, TargetRatio};

pub struct Case {
    pub seed: u64,
    pub inst: Instance,
    pub ratio: TargetRatio,
}

pub fn coprime_ratios(max_q: u64, include_one: bool) -> Vec<TargetRatio> {
    let mut out = Vec::new();
    for q in 1..=max_q {
        for p in 1..=q {
            if num_integer::gcd(p, q) == 1 && (include_one || p < q) {
                out.push(TargetRatio::new(p, q).unwrap());
            }
        }
    }
    out
}

/// Seeded corpus: N in 1..=max_n, d in 1..=max_d, a coprime p/q with
/// 1 <= p <= q <= 9, denominators up to 100, zero density cycling through
/// 0, 1/4 and 1/2.
pub fn random_corpus(count: usize, max_n: usize, max_d: usize, base_seed: u64) -> Vec<Case> {
    let ratios = coprime_ratios(9, true);
    let densities = [int(0), rat(1, 4), rat(1, 2)];
    (0..count)
        .map(|k| {
            let seed = base_seed + k as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0de);
            let n = rng.gen_range(1..=max_n);
            let d = rng.gen_range(1..=max_d);
            let ratio = ratios[rng.gen_range(0..ratios.len())];
            let inst = random_instance(seed, n, d, 100, &densities[k % 3]).unwrap();
            Case { seed, inst, ratio }
        })
        .collect()
}

/// Rank by elimination over rows, pivoting on the last nonzero entry.
pub fn rank(columns: &[RatVec]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let dim = columns[0].dim();
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut rank = 0;
    for col in (0..columns.len()).rev() {
        let Some(pr) = (rank..dim).rev().find(|&r| rows[r][col] != int(0)) else {
            continue;
        };
        rows.swap(rank, pr);
        for r in 0..dim {
            if r != rank && rows[r][col] != int(0) {
                let factor = &rows[r][col] / &rows[rank][col];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}
