//! Fillings of skew shapes and the brute-force enumeration oracles.
//!
//! The enumerations here are deliberately naive: they walk every filling
//! within a weight bound by backtracking. They are the ground truth that
//! the closed formulas elsewhere in the crate are verified against, so
//! they must not share any machinery with those formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrays::AltWord;
use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::shapes::{Cell, Partition, SkewShape};

/// Cap on cells for exhaustive standard-tableau counting.
pub const SYT_BRUTE_CAP: usize = 10;

/// An assignment of nonnegative integers to the cells of a skew shape.
///
/// Whether the filling is a reverse plane partition, a semistandard
/// tableau, or a standard tableau is a property checked on demand, not a
/// type distinction; the enumeration oracles below produce fillings of a
/// specific kind.
#[derive(Clone, PartialEq, Eq)]
pub struct Filling {
    shape: SkewShape,
    entries: BTreeMap<Cell, u32>,
}

impl Filling {
    /// Builds a filling; the entry map must cover exactly the skew cells.
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, u32>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::FillingDomainMismatch);
        }
        Ok(Filling { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entry(&self, cell: Cell) -> u32 {
        self.entries[&cell]
    }

    pub fn entries(&self) -> &BTreeMap<Cell, u32> {
        &self.entries
    }

    /// Sum of all entries.
    pub fn weight(&self) -> u64 {
        self.entries.values().map(|&v| v as u64).sum()
    }

    fn left_of(&self, cell: Cell) -> Option<u32> {
        if cell.col > 1 {
            self.entries.get(&Cell::new(cell.row, cell.col - 1)).copied()
        } else {
            None
        }
    }

    fn above(&self, cell: Cell) -> Option<u32> {
        if cell.row > 1 {
            self.entries.get(&Cell::new(cell.row - 1, cell.col)).copied()
        } else {
            None
        }
    }

    /// Weakly increasing along rows and columns.
    pub fn is_rpp(&self) -> bool {
        self.entries.iter().all(|(&c, &v)| {
            self.left_of(c).is_none_or(|l| l <= v) && self.above(c).is_none_or(|u| u <= v)
        })
    }

    /// Weakly increasing rows, strictly increasing columns, entries >= 1.
    pub fn is_ssyt(&self) -> bool {
        self.entries.iter().all(|(&c, &v)| {
            v >= 1
                && self.left_of(c).is_none_or(|l| l <= v)
                && self.above(c).is_none_or(|u| u < v)
        })
    }

    /// Entries are a permutation of 1..=m with strictly increasing rows
    /// and columns.
    pub fn is_syt(&self) -> bool {
        let m = self.entries.len() as u32;
        let mut seen = vec![false; m as usize + 1];
        for &v in self.entries.values() {
            if v < 1 || v > m || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        self.entries.iter().all(|(&c, &v)| {
            self.left_of(c).is_none_or(|l| l < v) && self.above(c).is_none_or(|u| u < v)
        })
    }
}

impl std::fmt::Debug for Filling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Filling[{}:", self.shape)?;
        for (c, v) in &self.entries {
            write!(f, " {c}={v}")?;
        }
        write!(f, "]")
    }
}

/// Number of standard Young tableaux of a straight shape by the hook
/// length product formula: `n! / prod h_u`.
pub fn count_syt_hook(shape: &Partition) -> BigInt {
    let n = shape.size();
    let mut numerator: BigInt = One::one();
    for v in 1..=n {
        numerator *= v;
    }
    let mut denominator: BigInt = One::one();
    for cell in shape.cells() {
        denominator *= shape.hook_length(cell).expect("cell from shape");
    }
    debug_assert!(
        (&numerator % &denominator).is_zero(),
        "hook product must divide n! exactly"
    );
    numerator / denominator
}

/// Number of standard Young tableaux of a skew shape by exhaustive
/// enumeration of linear extensions.
///
/// Cells are added in value order; at each step any cell whose left and
/// upper neighbors (within the shape) are already placed may receive the
/// next value. Intermediate states are cached by the set of placed cells.
pub fn count_syt_brute(shape: &SkewShape) -> Result<BigInt> {
    let cells = shape.cells();
    let m = cells.len();
    if m > SYT_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "standard tableau enumeration",
            value: m,
            cap: SYT_BRUTE_CAP,
        });
    }
    if m == 0 {
        return Ok(One::one());
    }

    // Index of the cell a cell depends on, if that neighbor is in the shape.
    let index_of: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let deps: Vec<Vec<usize>> = cells
        .iter()
        .map(|&c| {
            let mut d = Vec::new();
            if c.col > 1 {
                if let Some(&i) = index_of.get(&Cell::new(c.row, c.col - 1)) {
                    d.push(i);
                }
            }
            if c.row > 1 {
                if let Some(&i) = index_of.get(&Cell::new(c.row - 1, c.col)) {
                    d.push(i);
                }
            }
            d
        })
        .collect();

    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut memo: BTreeMap<u32, BigInt> = BTreeMap::new();
    fn count(mask: u32, full: u32, deps: &[Vec<usize>], memo: &mut BTreeMap<u32, BigInt>) -> BigInt {
        if mask == full {
            return One::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut total: BigInt = Zero::zero();
        for (i, d) in deps.iter().enumerate() {
            let bit = 1u32 << i;
            if mask & bit == 0 && d.iter().all(|&j| mask & (1 << j) != 0) {
                total += count(mask | bit, full, deps, memo);
            }
        }
        memo.insert(mask, total.clone());
        total
    }
    Ok(count(0, full, &deps, &mut memo))
}

/// Generic bounded enumeration over fillings in row-major cell order.
///
/// `lo_from` computes the smallest admissible value at a cell from its
/// left/up neighbors (where present in the shape); each count lands in the
/// coefficient of `q^weight`.
struct GfWalk<'a, F> {
    cells: Vec<Cell>,
    shape: &'a SkewShape,
    degree: usize,
    lo_from: F,
}

impl<F: Fn(Option<u32>, Option<u32>) -> u32> GfWalk<'_, F> {
    fn run(&self) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); self.degree + 1];
        let mut values: BTreeMap<Cell, u32> = BTreeMap::new();
        self.rec(0, 0, &mut values, &mut coeffs);
        QSeries::from_coeffs(self.degree, coeffs)
    }

    fn rec(&self, idx: usize, used: u64, values: &mut BTreeMap<Cell, u32>, coeffs: &mut [BigInt]) {
        if idx == self.cells.len() {
            coeffs[used as usize] += 1;
            return;
        }
        let c = self.cells[idx];
        let left = (c.col > 1 && self.shape.contains(Cell::new(c.row, c.col - 1)))
            .then(|| values[&Cell::new(c.row, c.col - 1)]);
        let up = (c.row > 1 && self.shape.contains(Cell::new(c.row - 1, c.col)))
            .then(|| values[&Cell::new(c.row - 1, c.col)]);
        let lo = (self.lo_from)(left, up);
        let budget = self.degree as u64 - used;
        if (lo as u64) > budget {
            return;
        }
        for v in lo..=(budget as u32) {
            values.insert(c, v);
            self.rec(idx + 1, used + v as u64, values, coeffs);
        }
        values.remove(&c);
    }
}

fn gf_by_backtracking(
    shape: &SkewShape,
    degree: usize,
    lo_from: impl Fn(Option<u32>, Option<u32>) -> u32,
) -> QSeries {
    GfWalk {
        cells: shape.cells(),
        shape,
        degree,
        lo_from,
    }
    .run()
}

/// Generating function of reverse plane partitions by entry sum, exact for
/// coefficients of `q^0 ..= q^degree`.
pub fn rpp_gf_brute(shape: &SkewShape, degree: usize) -> QSeries {
    gf_by_backtracking(shape, degree, |left, up| {
        left.unwrap_or(0).max(up.unwrap_or(0))
    })
}

/// Generating function of semistandard Young tableaux by entry sum, exact
/// for coefficients of `q^0 ..= q^degree`.
pub fn ssyt_gf_brute(shape: &SkewShape, degree: usize) -> QSeries {
    gf_by_backtracking(shape, degree, |left, up| {
        left.unwrap_or(1).max(up.map_or(1, |u| u + 1))
    })
}

/// The cells of the one-ribbon skew staircase (outer index `n + 2`, inner
/// index `n`) in reading order: bottom-left cell first, then alternately up
/// and right to the top-right cell. 2n + 1 cells in total.
pub fn ribbon_reading_path(n: usize) -> Vec<Cell> {
    let mut path = Vec::with_capacity(2 * n + 1);
    path.push(Cell::new(n + 1, 1));
    for t in 1..=n {
        path.push(Cell::new(n + 1 - t, t));
        path.push(Cell::new(n + 1 - t, t + 1));
    }
    path
}

/// Recognizes the shape `staircase(n+2) / staircase(n)` and returns `n`.
fn ribbon_order(shape: &SkewShape) -> Result<usize> {
    let rows = shape.outer().len();
    if rows < 2
        || *shape.outer() != Partition::staircase(rows + 1)
        || *shape.inner() != Partition::staircase(rows - 1)
    {
        return Err(Error::NotSkewStaircase(shape.to_string()));
    }
    Ok(rows - 1)
}

/// Reads a reverse plane partition on a one-ribbon skew staircase into a
/// word, bottom-left to top-right. The row/column inequalities of the
/// filling become exactly the alternating inequalities of the word.
pub fn ribbon_to_word(filling: &Filling) -> Result<AltWord> {
    let n = ribbon_order(filling.shape())?;
    let letters = ribbon_reading_path(n)
        .into_iter()
        .map(|c| filling.entry(c))
        .collect();
    AltWord::new(letters)
}

/// Inverse of [`ribbon_to_word`]: lays a word of length `2n + 1` back onto
/// the ribbon.
pub fn word_to_ribbon(word: &AltWord, n: usize) -> Result<Filling> {
    if n < 1 || word.len() != 2 * n + 1 {
        return Err(Error::Invalid(format!(
            "word of length {} does not fit a ribbon with parameter {n}",
            word.len()
        )));
    }
    let shape = SkewShape::skew_staircase(n + 2, n)?;
    let entries = ribbon_reading_path(n)
        .into_iter()
        .zip(word.letters().iter().copied())
        .collect();
    let filling = Filling::new(shape, entries)?;
    debug_assert!(filling.is_rpp());
    Ok(filling)
}
