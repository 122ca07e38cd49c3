//! Euler numbers, alternating permutations, and the q-Euler series that
//! appear as determinant entries in the staircase identity.
//!
//! The polynomial `estar(m)` sums `q^maj` over all reverse alternating
//! permutations of `[m]` after a fixed relabeling of the inverse (the
//! values `2i` and `2i+1` are interchanged). Dividing by
//! `(1-q)(1-q^2)...(1-q^m)` gives the series `estar_tilde(m)`, and the
//! `k x k` determinant of those series over shifted odd indices is the
//! right-hand side of the main identity verified by this crate.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{det, QSeries};

/// Largest odd index for which the permutation enumeration behind
/// [`estar`] is allowed to run (353 792 permutations at 11).
pub const ESTAR_CAP: usize = 11;

/// Largest argument accepted by [`euler_number`]; far below any integer
/// overflow, this is just the advertised desk scale.
pub const EULER_CAP: usize = 14;

/// A permutation of `{1, ..., m}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a bijection on `{1, ..., word.len()}`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m + 1];
        for &v in &word {
            if v < 1 || v > m || seen[v] {
                return Err(Error::Invalid(format!("{word:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            word: (1..=m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// 1-based positions `i` with `word[i] > word[i+1]`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// Major index: the sum of descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Down-up pattern: `w1 > w2 < w3 > ...`.
    pub fn is_alternating(&self) -> bool {
        word_follows_pattern(&self.word, false)
    }

    /// Up-down pattern: `w1 < w2 > w3 < ...`.
    pub fn is_reverse_alternating(&self) -> bool {
        word_follows_pattern(&self.word, true)
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `up_first`: position 2 must rise above position 1 (reverse alternating);
/// otherwise it must fall (alternating).
fn word_follows_pattern(word: &[usize], up_first: bool) -> bool {
    word.windows(2).enumerate().all(|(i, w)| {
        let position = i + 1; // 1-based index of w[0]
        let rise = (position % 2 == 1) == up_first;
        if rise {
            w[0] < w[1]
        } else {
            w[0] > w[1]
        }
    })
}

/// Walks every permutation of `[m]` following the given zigzag pattern, in
/// lexicographic order.
fn for_each_zigzag(m: usize, up_first: bool, mut visit: impl FnMut(&[usize])) {
    let mut word: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    fn rec(
        m: usize,
        up_first: bool,
        word: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) {
        if word.len() == m {
            visit(word);
            return;
        }
        let position = word.len() + 1;
        for v in 1..=m {
            if used[v] {
                continue;
            }
            if position > 1 {
                let prev = *word.last().unwrap();
                let rise = position.is_multiple_of(2) == up_first;
                if rise && v <= prev || !rise && v >= prev {
                    continue;
                }
            }
            used[v] = true;
            word.push(v);
            rec(m, up_first, word, used, visit);
            word.pop();
            used[v] = false;
        }
    }
    rec(m, up_first, &mut word, &mut used, &mut visit);
}

/// Euler number `E_n` by exhaustive enumeration of alternating
/// permutations (`w1 > w2 < w3 > ...`).
pub fn euler_number_by_enumeration(n: usize) -> BigInt {
    let mut count: BigInt = Zero::zero();
    for_each_zigzag(n, false, |_| count += 1);
    count
}

/// Euler number `E_n` by the boustrophedon (Seidel/Entringer) recurrence:
/// `T(n, k) = T(n, k-1) + T(n-1, n-k)` with `T(0, 0) = 1`, `E_n = T(n, n)`.
pub fn euler_number_by_seidel(n: usize) -> BigInt {
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    for row_len in 1..=n {
        let mut row: Vec<BigInt> = vec![BigInt::zero()];
        for k in 1..=row_len {
            let next = &row[k - 1] + &prev[row_len - k];
            row.push(next);
        }
        prev = row;
    }
    prev.last().cloned().unwrap()
}

/// Euler number `E_n`: enumeration at small sizes, the Seidel recurrence
/// above them. The two routes are cross-checked in the test suite.
pub fn euler_number(n: usize) -> BigInt {
    assert!(n <= EULER_CAP, "euler_number supports n <= {EULER_CAP}");
    if n <= 9 {
        euler_number_by_enumeration(n)
    } else {
        euler_number_by_seidel(n)
    }
}

/// All reverse alternating permutations of `[m]` (`w1 < w2 > w3 < ...`) in
/// lexicographic order. `m` must be odd and within the enumeration cap.
pub fn reverse_alternating(m: usize) -> Result<Vec<Permutation>> {
    check_estar_arg(m)?;
    let mut out = Vec::new();
    for_each_zigzag(m, true, |word| {
        out.push(Permutation {
            word: word.to_vec(),
        })
    });
    Ok(out)
}

fn check_estar_arg(m: usize) -> Result<()> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenSize(m));
    }
    if m > ESTAR_CAP {
        return Err(Error::CapExceeded {
            what: "reverse alternating permutation enumeration",
            value: m,
            cap: ESTAR_CAP,
        });
    }
    Ok(())
}

/// The reverse alternating permutation `1 3 2 5 4 ... m (m-1)` used to
/// relabel inverses in [`estar`]; `m` must be odd.
pub fn kappa(m: usize) -> Permutation {
    assert!(m % 2 == 1, "kappa is defined for odd sizes");
    let mut word = Vec::with_capacity(m);
    word.push(1);
    for i in 1..=(m - 1) / 2 {
        word.push(2 * i + 1);
        word.push(2 * i);
    }
    Permutation { word }
}

/// Interchanges the values `2i` and `2i+1` in the one-line word; this is
/// composition with [`kappa`] acting on values. (Acting on positions
/// instead would give a different statistic and is not what is computed
/// here; the one-ribbon identity in the test suite pins this reading.)
fn swap_value_pairs(word: &[usize]) -> Vec<usize> {
    word.iter()
        .map(|&v| {
            if v == 1 {
                1
            } else if v % 2 == 0 {
                v + 1
            } else {
                v - 1
            }
        })
        .collect()
}

fn maj_of_word(word: &[usize]) -> usize {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Counts reverse alternating permutations of `[m]` by the major index of
/// the relabeled inverse; entry `h[d]` is the number with statistic `d`.
fn estar_histogram(m: usize) -> Result<Vec<BigInt>> {
    check_estar_arg(m)?;
    let mut histogram = vec![BigInt::zero(); m * (m - 1) / 2 + 1];
    let mut inverse = vec![0usize; m];
    for_each_zigzag(m, true, |word| {
        for (i, &v) in word.iter().enumerate() {
            inverse[v - 1] = i + 1;
        }
        let relabeled = swap_value_pairs(&inverse);
        histogram[maj_of_word(&relabeled)] += 1;
    });
    Ok(histogram)
}

/// The q-Euler polynomial over reverse alternating permutations of `[m]`,
/// truncated at the largest possible major index `m(m-1)/2`. Coefficients
/// sum to the Euler number `E_m`.
pub fn estar(m: usize) -> Result<QSeries> {
    let histogram = estar_histogram(m)?;
    let trunc = histogram.len() - 1;
    Ok(QSeries::from_coeffs(trunc, histogram))
}

/// `estar(m) / ((1-q)(1-q^2)...(1-q^m))`, truncated at `degree`.
pub fn estar_tilde(m: usize, degree: usize) -> Result<QSeries> {
    let histogram = estar_histogram(m)?;
    let mut numerator = vec![BigInt::zero(); degree + 1];
    for (d, c) in histogram.into_iter().enumerate().take(degree + 1) {
        numerator[d] = c;
    }
    let numerator = QSeries::from_coeffs(degree, numerator);

    let mut denominator = QSeries::one(degree);
    for j in 1..=m {
        denominator = denominator.mul(&QSeries::one_minus_q_pow(degree, j));
    }
    Ok(numerator.mul(&denominator.inv_unit().expect("constant term 1")))
}

/// The `k x k` determinant with entry `(i, j)` equal to
/// `estar_tilde(2(n+i+j)-3)`, truncated at `degree`.
pub fn mpp_det_rhs(n: usize, k: usize, degree: usize) -> Result<QSeries> {
    assert!(n >= 1 && k >= 1);
    let max_index = 2 * (n + 2 * k) - 3;
    if max_index > ESTAR_CAP {
        return Err(Error::CapExceeded {
            what: "q-Euler determinant index",
            value: max_index,
            cap: ESTAR_CAP,
        });
    }
    let mut entries: HashMap<usize, QSeries> = HashMap::new();
    let mut matrix = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = Vec::with_capacity(k);
        for j in 1..=k {
            let m = 2 * (n + i + j) - 3;
            let entry = match entries.get(&m) {
                Some(e) => e.clone(),
                None => {
                    let e = estar_tilde(m, degree)?;
                    entries.insert(m, e.clone());
                    e
                }
            };
            row.push(entry);
        }
        matrix.push(row);
    }
    det(&matrix)
}

/// The weight offset `k(k-1)(6n+8k-1)/6` of the main identity; always an
/// exact integer.
pub fn weight_offset(n: usize, k: usize) -> u64 {
    let n = n as u64;
    let k = k as u64;
    let product = k * (k - 1) * (6 * n + 8 * k - 1);
    assert_eq!(product % 6, 0, "offset formula is always divisible by 6");
    product / 6
}
