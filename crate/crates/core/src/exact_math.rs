//! Exact integer arithmetic: binomial coefficients, Catalan numbers and
//! fraction-free determinants.
//!
//! Integers are `num_bigint::BigInt` and rationals are `BigRational`, which
//! is always kept in lowest terms with a positive denominator.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `C(n, k)`, with the convention that it vanishes for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc * (n - i) is always divisible by (i + 1) after the multiply.
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Like [`binomial`] but accepts a signed top argument, which must be
/// nonnegative.
pub fn binomial_signed(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "binomial with negative top argument {n}"
        )));
    }
    Ok(binomial(n as u64, k))
}

/// The Catalan number `c_n = C(2n, n) / (n + 1)` for `n >= 1`.
pub fn catalan(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "catalan index must be positive".into(),
        ));
    }
    let (q, r) = binomial(2 * n, n as i64).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Both sides of `sum_{z=a}^{a+b-1} C(z, p) = C(a+b, p+1) - C(a, p+1)`:
/// the left evaluated term by term, the right in closed form.
pub fn hockey_stick_sides(a: u64, b: u64, p: u64) -> (BigInt, BigInt) {
    let lhs = (a..a + b).map(|z| binomial(z, p as i64)).sum();
    let rhs = binomial(a + b, p as i64 + 1) - binomial(a, p as i64 + 1);
    (lhs, rhs)
}

/// Dense rectangular matrix of big integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    /// An empty outer vector gives the 0x0 matrix.
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            entries.extend(row.into_iter().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// True when every entry strictly below the main diagonal is zero.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i)).all(|j| self[(i, j)].is_zero()))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate division is exact, so no rationals appear. The 0x0
/// matrix has determinant 1.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let num = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Parses a decimal rational such as `-2`, `3/2` or `+7`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational '{text}'"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{text}'")));
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `n` or `n/d` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn sign_of(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
