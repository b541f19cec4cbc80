//! Exact rational scalars and vectors, plus the elimination kernel used by
//! purification.
//!
//! Nothing here touches floating point. Every comparison that decides which
//! branch the selector takes is made on canonical fractions.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Smallest integer not below `num / den`.
pub fn ceil_div(num: i128, den: i128) -> Result<i128> {
    if den <= 0 {
        return invalid(format!("ceil_div denominator must be positive, got {den}"));
    }
    let quot = num.div_euclid(den);
    if num.rem_euclid(den) == 0 {
        Ok(quot)
    } else {
        Ok(quot + 1)
    }
}

/// Fixed-length vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVec(Vec<Rational>);

impl RatVec {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVec(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rational::zero(); dim])
    }

    /// Standard basis vector with a one at `axis` (0-based).
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RatVec(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// `self += other`. Panics on dimension mismatch.
    pub fn add_assign(&mut self, other: &RatVec) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dimension mismatch in vector addition"
        );
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    /// `self += scale * other`. Panics on dimension mismatch.
    pub fn add_scaled(&mut self, scale: &Rational, other: &RatVec) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dimension mismatch in vector addition"
        );
        if scale.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += scale * b;
        }
    }

    pub fn scaled(&self, scale: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|x| x * scale).collect())
    }

    /// Sum of a collection of vectors of dimension `dim`.
    pub fn sum<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a RatVec>) -> RatVec {
        let mut acc = RatVec::zeros(dim);
        for v in vectors {
            acc.add_assign(v);
        }
        acc
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, index: usize) -> &mut Rational {
        &mut self.0[index]
    }
}

impl AsRef<RatVec> for RatVec {
    fn as_ref(&self) -> &RatVec {
        self
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(entries: Vec<Rational>) -> Self {
        RatVec(entries)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Coordinatewise order: true iff every `lhs[j] >= rhs[j]`.
pub fn vec_geq(lhs: &RatVec, rhs: &RatVec) -> Result<bool> {
    if lhs.dim() != rhs.dim() {
        return invalid(format!(
            "cannot compare vectors of dimension {} and {}",
            lhs.dim(),
            rhs.dim()
        ));
    }
    Ok(lhs.iter().zip(rhs.iter()).all(|(a, b)| a >= b))
}

/// Row `r` of the matrix whose columns are `columns`, multiplied by the lcm of
/// that row's denominators. Same row space and kernel, integer entries.
pub(crate) fn integer_rows<C: AsRef<RatVec>>(dim: usize, columns: &[C]) -> Vec<Vec<BigInt>> {
    (0..dim)
        .map(|r| {
            let lcm = columns
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.as_ref()[r].denom()));
            columns
                .iter()
                .map(|c| {
                    let x = &c.as_ref()[r];
                    x.numer() * (&lcm / x.denom())
                })
                .collect()
        })
        .collect()
}

/// Finds a nonzero `v` with `sum_i v[i] * columns[i] = 0`, or `None` when the
/// columns are linearly independent.
///
/// Columns are scanned left to right; each pivots on the first remaining row
/// with a nonzero entry. The first column without a pivot is expressed
/// through the earlier pivot columns, which yields the returned dependence,
/// scaled so its first nonzero entry is 1. That dependence is unique up to
/// scale, so the result does not depend on how the elimination is carried
/// out. Here rows are cleared of denominators and reduced fraction-free
/// (Bareiss), which keeps every intermediate an integer.
///
/// Since a column's reduced form depends only on the columns before it, the
/// answer for a prefix of `columns` that already contains a dependence equals
/// the answer for the whole list, padded with zeros.
pub fn kernel_vector<C: AsRef<RatVec>>(columns: &[C]) -> Result<Option<RatVec>> {
    let Some(first) = columns.first() else {
        return Ok(None);
    };
    let dim = first.as_ref().dim();
    if let Some((i, c)) = columns
        .iter()
        .enumerate()
        .find(|(_, c)| c.as_ref().dim() != dim)
    {
        return invalid(format!(
            "column {i} has dimension {}, expected {dim}",
            c.as_ref().dim()
        ));
    }

    let rows = integer_rows(dim, columns);
    Ok(integer_kernel(rows, columns.len()).map(|ints| {
        let lead = ints
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("kernel vector is nonzero");
        RatVec(
            ints.into_iter()
                .map(|x| Rational::new(x, lead.clone()))
                .collect(),
        )
    }))
}

/// The same dependence as [`kernel_vector`], for a matrix already given as
/// integer rows. The result is primitive with a positive leading entry, so
/// it is a positive multiple of the rational answer.
pub(crate) fn integer_kernel(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Option<Vec<BigInt>> {
    let dim = rows.len();
    // Fraction-free Gauss-Jordan: after pivot k every pivot row carries the
    // same diagonal entry and all entries stay integral.
    let mut prev_pivot = BigInt::one();
    let mut rank = 0;

    for col in 0..ncols {
        let Some(r) = (rank..dim).find(|&r| !rows[r][col].is_zero()) else {
            return Some(dependence(&rows, rank, col, ncols, &prev_pivot));
        };
        rows.swap(rank, r);
        let pivot_row = rows[rank].clone();
        let pivot = &pivot_row[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let factor = row[col].clone();
            for j in 0..ncols {
                if j < col && j != i {
                    // Earlier pivot columns are zero off the diagonal.
                    continue;
                }
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev_pivot;
            }
        }
        prev_pivot = pivot.clone();
        rank += 1;
    }
    None
}

/// Reads the dependence of column `col` off the reduced matrix: every pivot
/// row `i < rank` has `det` on its diagonal, so `det * e_col - sum_i
/// rows[i][col] * e_i` combines the columns to zero.
fn dependence(
    rows: &[Vec<BigInt>],
    rank: usize,
    col: usize,
    ncols: usize,
    det: &BigInt,
) -> Vec<BigInt> {
    let mut ints = vec![BigInt::zero(); ncols];
    ints[col] = det.clone();
    for (i, row) in rows.iter().enumerate().take(rank) {
        ints[i] = -row[col].clone();
    }
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if lead_negative { -g } else { g };
    ints.into_iter().map(|x| x / &g).collect()
}
