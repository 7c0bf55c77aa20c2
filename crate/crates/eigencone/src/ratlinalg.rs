//! Exact rational linear algebra.
//!
//! Everything here is over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. Ranks are computed by
//! fraction-free (Bareiss) elimination on an integer matrix obtained by
//! clearing denominators row by row, which keeps intermediate entries
//! polynomially bounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A dense matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl RatMatrix {
    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(data: Vec<Vec<Rational>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Exact rank via fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self.data.iter().map(|row| clear_denominators(row)).collect();
        bareiss_rank(&mut m, self.cols)
    }

    /// Dimension of the right nullspace, `cols - rank`.
    pub fn nullspace_dimension(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Scales a row of rationals to integers by the lcm of denominators.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Bareiss elimination; destroys `m` and returns its rank.
fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// The primitive integer vector spanning the same ray as `v`: entries are
/// scaled to integers with overall gcd 1; the first nonzero entry is made
/// positive. Errors on the zero vector.
pub fn primitive(v: &[Rational]) -> Result<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ints = clear_denominators(v);
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|x| x / &gcd).collect();
    if out
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for x in &mut out {
            *x = -std::mem::take(x);
        }
    }
    Ok(out)
}
