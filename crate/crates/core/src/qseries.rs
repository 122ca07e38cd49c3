//! Truncated formal power series in one variable `q` with exact
//! arbitrary-precision integer coefficients.
//!
//! A [`QSeries`] carries its truncation degree `D` and exactly `D + 1`
//! coefficients for `q^0 ... q^D`. Arithmetic never re-truncates silently:
//! binary operations panic if the truncations differ, and lowering the
//! degree requires an explicit [`QSeries::truncated`] call. Coefficients
//! are [`BigInt`], so determinants and inverse series stay exact no matter
//! how large the coefficients grow.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power series in `q` truncated at a fixed degree.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QSeriesRepr", into = "QSeriesRepr")]
pub struct QSeries {
    trunc: usize,
    coeffs: Vec<BigInt>,
}

/// Wire format: coefficients as decimal strings so values of any magnitude
/// round-trip bit-exactly through JSON.
#[derive(Serialize, Deserialize)]
struct QSeriesRepr {
    truncation: usize,
    coeffs: Vec<String>,
}

impl From<QSeries> for QSeriesRepr {
    fn from(s: QSeries) -> Self {
        QSeriesRepr {
            truncation: s.trunc,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<QSeriesRepr> for QSeries {
    type Error = String;

    fn try_from(r: QSeriesRepr) -> std::result::Result<Self, String> {
        if r.coeffs.len() != r.truncation + 1 {
            return Err(format!(
                "expected {} coefficients, got {}",
                r.truncation + 1,
                r.coeffs.len()
            ));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QSeries {
            trunc: r.truncation,
            coeffs,
        })
    }
}

impl QSeries {
    /// The zero series truncated at `trunc`.
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            trunc,
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        Self::monomial(trunc, 0, BigInt::one())
    }

    /// The series `c * q^power` (zero if `power` exceeds the truncation).
    pub fn monomial(trunc: usize, power: usize, c: BigInt) -> Self {
        let mut s = Self::zero(trunc);
        if power <= trunc {
            s.coeffs[power] = c;
        }
        s
    }

    /// The polynomial `1 - q^h`.
    pub fn one_minus_q_pow(trunc: usize, h: usize) -> Self {
        let mut s = Self::one(trunc);
        if h <= trunc {
            s.coeffs[h] -= 1;
        }
        s
    }

    /// Builds a series from exactly `trunc + 1` coefficients.
    pub fn from_coeffs(trunc: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(
            coeffs.len(),
            trunc + 1,
            "coefficient count must equal truncation + 1"
        );
        QSeries { trunc, coeffs }
    }

    /// Convenience constructor for small test values. Missing high
    /// coefficients are zero.
    pub fn from_ints(trunc: usize, coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= trunc + 1);
        let mut full = vec![BigInt::zero(); trunc + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            full[i] = BigInt::from(c);
        }
        QSeries {
            trunc,
            coeffs: full,
        }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `q^i`; panics if `i` exceeds the truncation.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of the lowest nonzero coefficient, if any.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Sum of all stored coefficients, i.e. the value at q = 1 when the
    /// series is actually a polynomial within its truncation.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn check_same_trunc(&self, other: &QSeries) {
        assert_eq!(
            self.trunc, other.trunc,
            "series truncations must match ({} vs {})",
            self.trunc, other.trunc
        );
    }

    /// Coefficient-wise sum. Panics if the truncations differ.
    pub fn add(&self, other: &QSeries) -> QSeries {
        self.check_same_trunc(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        QSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Coefficient-wise difference. Panics if the truncations differ.
    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.check_same_trunc(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        QSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the shared degree. Panics if the
    /// truncations differ.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        self.check_same_trunc(other);
        let d = self.trunc;
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QSeries {
            trunc: d,
            coeffs,
        }
    }

    /// Multiplies by `q^n`, keeping the truncation. Top coefficients fall
    /// off the end; that is exact as long as the result is only read up to
    /// the shared truncation.
    pub fn shifted(&self, n: usize) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); self.trunc + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + n <= self.trunc {
                coeffs[i + n] = c.clone();
            }
        }
        QSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Explicitly lowers the truncation to `d <= D`.
    pub fn truncated(&self, d: usize) -> QSeries {
        assert!(d <= self.trunc, "cannot raise a truncation implicitly");
        QSeries {
            trunc: d,
            coeffs: self.coeffs[..=d].to_vec(),
        }
    }

    /// Multiplicative inverse up to the truncation.
    ///
    /// The constant term must be 1 or -1 so the inverse has integer
    /// coefficients.
    pub fn inv_unit(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let d = self.trunc;
        let mut inv = vec![BigInt::zero(); d + 1];
        // c0 is its own inverse.
        inv[0] = c0.clone();
        for n in 1..=d {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(c0 * acc);
        }
        Ok(QSeries {
            trunc: d,
            coeffs: inv,
        })
    }
}

/// Determinant of a square matrix of series sharing one truncation.
///
/// Expands over all permutations with sign. No division takes place, so the
/// result is exact; the cost is factorial in the dimension, which is fine at
/// the handful-of-rows scale this crate works at.
pub fn det(matrix: &[Vec<QSeries>]) -> Result<QSeries> {
    let k = matrix.len();
    if k == 0 || matrix.iter().any(|row| row.len() != k) {
        return Err(Error::NonSquareMatrix);
    }
    let trunc = matrix[0][0].truncation();
    for row in matrix {
        for entry in row {
            if entry.truncation() != trunc {
                panic!(
                    "series truncations must match ({} vs {})",
                    trunc,
                    entry.truncation()
                );
            }
        }
    }

    let mut total = QSeries::zero(trunc);
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut term = QSeries::one(trunc);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&matrix[i][j]);
        }
        if permutation_parity_is_odd(&perm) {
            total = total.sub(&term);
        } else {
            total = total.add(&term);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(total)
}

fn permutation_parity_is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Advances `perm` to its lexicographic successor; false once exhausted.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

impl fmt::Display for QSeries {
    /// Space-separated coefficients of `q^0 ... q^D`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[D={}: {}]", self.trunc, self)
    }
}
