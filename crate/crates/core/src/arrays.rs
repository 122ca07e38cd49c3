//! Staircase alternating arrays, the prefix-exchange operator on row
//! pairs, the sign-reversing involution built from it, and the bijection
//! from the involution's fixed points to reverse plane partitions of a
//! skew staircase.
//!
//! # Geometry
//!
//! An array has `k` rows of alternating words laid out on a common column
//! grid: row `i` ends at column `2i`, so each row's last entry sits two
//! columns right of the previous row's last entry. Row lengths determine
//! everything else. With `l'_i = len_i - 2i + 2`, the array has order `n`
//! exactly when `{l'_i} = {2n+1, 2n+3, ..., 2n+2k-1}`; the permutation
//! `sigma_i = (l'_i - 2n + 1) / 2` records which length class each row
//! carries, and the sign of the array is the sign of that permutation.
//!
//! # Cutting positions
//!
//! Rows `i < j` overlap in an odd number `p` of columns, giving `p + 1`
//! boundaries, numbered 0 (left of the overlap) through `p`. A boundary is
//! a *cutting position* when exchanging all entries of the two rows
//! strictly left of it leaves both rows alternating. Exchanging at the
//! leftmost cutting position is the row transposition; it is self-inverse,
//! swaps the two rows' length classes, and therefore flips the sign.
//!
//! The first cutting position is computed by two independent routes: a
//! direct swap-and-validate scan over all boundaries, and the inequality
//! characterization on the overlap entries. Debug builds assert they
//! agree, and [`check_cutting_consistency`] compares them on demand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qeuler::Permutation;
use crate::qseries::QSeries;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{ribbon_reading_path, Filling};

/// Cap on the number of rows for slice enumeration.
pub const ARRAY_K_CAP: usize = 3;

/// Cap on the weight bound for slice enumeration.
pub const ARRAY_WEIGHT_CAP: u64 = 64;

/// A word of nonnegative integers with `a1 >= a2 <= a3 >= a4 <= ...`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltWord {
    letters: Vec<u32>,
}

impl AltWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if !is_alternating(letters.iter().copied()) {
            return Err(Error::Invalid(format!(
                "word {letters:?} is not alternating"
            )));
        }
        Ok(AltWord { letters })
    }

    /// For words produced by construction rules that already guarantee the
    /// zigzag shape.
    fn from_trusted(letters: Vec<u32>) -> Self {
        debug_assert!(is_alternating(letters.iter().copied()));
        AltWord { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.letters.iter().map(|&x| u64::from(x)).sum()
    }
}

impl fmt::Display for AltWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for AltWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltWord[{self}]")
    }
}

/// Odd 1-based positions weakly dominate their even neighbors.
fn is_alternating(letters: impl Iterator<Item = u32>) -> bool {
    let mut position = 0usize;
    let mut prev: Option<u32> = None;
    for x in letters {
        position += 1;
        if let Some(p) = prev {
            // `position` indexes x; the pair (prev, x) starts at position - 1.
            let ok = if (position - 1) % 2 == 1 { p >= x } else { p <= x };
            if !ok {
                return false;
            }
        }
        prev = Some(x);
    }
    true
}

/// The permutation an array induces on its row length classes, with sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayPermutation {
    pub sigma: Permutation,
    pub sign: i8,
}

/// The order `n >= 1` determined by the row lengths, or an error when the
/// shifted lengths do not form the required run of consecutive odd values.
pub fn order_of(rows: &[AltWord]) -> Result<usize> {
    let lengths: Vec<usize> = rows.iter().map(AltWord::len).collect();
    if rows.is_empty() {
        return Err(Error::NoValidOrder(lengths));
    }
    let mut shifted: Vec<i64> = lengths
        .iter()
        .enumerate()
        .map(|(idx, &l)| l as i64 - 2 * (idx as i64 + 1) + 2)
        .collect();
    shifted.sort_unstable();
    let lowest = shifted[0];
    if lowest < 3 || lowest % 2 == 0 {
        return Err(Error::NoValidOrder(lengths));
    }
    for (idx, &v) in shifted.iter().enumerate() {
        if v != lowest + 2 * idx as i64 {
            return Err(Error::NoValidOrder(lengths));
        }
    }
    Ok(((lowest - 1) / 2) as usize)
}

/// `k` alternating words on the staircase grid, of a definite order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AltArray {
    rows: Vec<AltWord>,
    order: usize,
}

impl AltArray {
    /// Validates the length condition and fixes the order.
    pub fn new(rows: Vec<AltWord>) -> Result<Self> {
        let order = order_of(&rows)?;
        Ok(AltArray { rows, order })
    }

    fn from_validated(rows: Vec<AltWord>, order: usize) -> Self {
        debug_assert_eq!(order_of(&rows).ok(), Some(order));
        AltArray { rows, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[AltWord] {
        &self.rows
    }

    /// Row by 1-based index.
    pub fn row(&self, i: usize) -> &AltWord {
        &self.rows[i - 1]
    }

    /// Sum of all entries.
    pub fn weight(&self) -> u64 {
        self.rows.iter().map(AltWord::weight).sum()
    }

    /// Grid span of row `i` (1-based); the row ends at column `2i`.
    fn span(&self, i: usize) -> (i64, i64) {
        let end = 2 * i as i64;
        (end - self.row(i).len() as i64 + 1, end)
    }

    fn check_pair(&self, i: usize, j: usize) {
        assert!(
            1 <= i && i < j && j <= self.k(),
            "row pair must satisfy 1 <= i < j <= k"
        );
    }

    /// The length-class permutation and its sign.
    pub fn associated_perm(&self) -> ArrayPermutation {
        let n = self.order as i64;
        let word = (1..=self.k())
            .map(|i| {
                let shifted = self.row(i).len() as i64 - 2 * i as i64 + 2;
                ((shifted - 2 * n + 1) / 2) as usize
            })
            .collect();
        let sigma = Permutation::new(word).expect("validated length condition");
        let sign = if sigma.inversions().is_multiple_of(2) { 1 } else { -1 };
        ArrayPermutation { sigma, sign }
    }

    pub fn sign(&self) -> i8 {
        self.associated_perm().sign
    }

    /// All cutting positions of rows `i < j`, by swap-and-validate scan.
    pub fn cutting_positions(&self, i: usize, j: usize) -> Vec<usize> {
        self.check_pair(i, j);
        let (si, _) = self.span(i);
        let (sj, _) = self.span(j);
        cutting_positions_raw(self.row(i).letters(), si, self.row(j).letters(), sj)
    }

    /// Leftmost cutting position of rows `i < j`, by swap-and-validate
    /// scan. Debug builds cross-check the inequality characterization.
    pub fn first_cutting_position(&self, i: usize, j: usize) -> Option<usize> {
        self.check_pair(i, j);
        let (si, _) = self.span(i);
        let (sj, _) = self.span(j);
        let scan =
            first_cutting_position_raw(self.row(i).letters(), si, self.row(j).letters(), sj);
        debug_assert_eq!(
            scan,
            self.first_cutting_position_by_inequalities(i, j),
            "cutting position routes disagree on rows {i},{j} of {self}"
        );
        scan
    }

    /// Leftmost cutting position of rows `i < j` from the inequality
    /// characterization on the overlap entries, independent of the scan.
    ///
    /// When row `i`'s length class is below row `j`'s, the overlap is all
    /// of row `i` (entries `a_1 ... a_p`, `p = 2m+1`) and row `j` is
    /// indexed so that `b_r` sits in the column of `a_{r-2}`. Walking
    /// `t = 0 ..= m`: the boundary left of `a_{2t+1}` cuts iff
    /// `a_{2t+1} >= b_{2t+2}`, the boundary right of it cuts iff
    /// `b_{2t+2} > a_{2t+1} >= b_{2t+4}`, and otherwise the strict
    /// interlacing `b_{2t+2} > a_{2t+1} < b_{2t+4}` forces the walk on.
    /// In the mirrored case (row `i`'s class above row `j`'s) the roles
    /// swap, entries of row `i` past its right end read as 0, and the walk
    /// always terminates — such pairs are always transposable.
    pub fn first_cutting_position_by_inequalities(&self, i: usize, j: usize) -> Option<usize> {
        self.check_pair(i, j);
        let (si, ei) = self.span(i);
        let (sj, _) = self.span(j);
        let wi = self.row(i).letters();
        let wj = self.row(j).letters();
        assert_ne!(si, sj, "distinct length classes imply distinct starts");

        if si > sj {
            let p = wi.len();
            let m = (p - 1) / 2;
            let a = |r: usize| wi[r - 1];
            let b = |r: usize| wj[((si - sj) + r as i64 - 3) as usize];
            for t in 0..=m {
                if a(2 * t + 1) >= b(2 * t + 2) {
                    return Some(2 * t);
                }
                if a(2 * t + 1) >= b(2 * t + 4) {
                    return Some(2 * t + 1);
                }
            }
            None
        } else {
            let p = (ei - sj + 1) as usize;
            let m = (p - 1) / 2;
            let b = |r: usize| wj[r - 1];
            let a = |r: usize| {
                let idx = (sj - si) + r as i64 - 3;
                if (idx as usize) < wi.len() {
                    wi[idx as usize]
                } else {
                    0
                }
            };
            for t in 0..=m {
                if b(2 * t + 1) >= a(2 * t + 2) {
                    return Some(2 * t);
                }
                if b(2 * t + 1) >= a(2 * t + 4) {
                    return Some(2 * t + 1);
                }
            }
            unreachable!("a pair with inverted length classes always has a cutting position")
        }
    }

    /// The strict interlacing between rows `i < j` that characterizes
    /// non-transposability: every odd-position entry of row `i` lies
    /// strictly below both adjacent even-position entries of row `j`.
    /// Only meaningful when row `i`'s length class is below row `j`'s.
    pub fn interlacing_holds(&self, i: usize, j: usize) -> bool {
        self.check_pair(i, j);
        let (si, _) = self.span(i);
        let (sj, _) = self.span(j);
        assert!(si > sj, "interlacing applies when row i sits inside row j");
        let wi = self.row(i).letters();
        let wj = self.row(j).letters();
        let m = (wi.len() - 1) / 2;
        let a = |r: usize| wi[r - 1];
        let b = |r: usize| wj[((si - sj) + r as i64 - 3) as usize];
        (0..=m).all(|t| b(2 * t + 2) > a(2 * t + 1) && a(2 * t + 1) < b(2 * t + 4))
    }

    pub fn is_transposable(&self, i: usize, j: usize) -> bool {
        self.first_cutting_position(i, j).is_some()
    }

    /// Exchanges the prefixes of rows `i < j` at their leftmost cutting
    /// position. Self-inverse; preserves order and weight; swaps the two
    /// rows' length classes, flipping the sign.
    pub fn transpose_rows(&self, i: usize, j: usize) -> Result<AltArray> {
        let t = self
            .first_cutting_position(i, j)
            .ok_or(Error::NotTransposable { i, j })?;
        let (si, _) = self.span(i);
        let (sj, _) = self.span(j);
        let cut = si.max(sj) + t as i64;
        let ci = (cut - si) as usize;
        let cj = (cut - sj) as usize;
        let wi = self.row(i).letters();
        let wj = self.row(j).letters();
        let new_i: Vec<u32> = wj[..cj].iter().chain(&wi[ci..]).copied().collect();
        let new_j: Vec<u32> = wi[..ci].iter().chain(&wj[cj..]).copied().collect();
        let mut rows = self.rows.clone();
        rows[i - 1] = AltWord::new(new_i).expect("cutting position keeps row i alternating");
        rows[j - 1] = AltWord::new(new_j).expect("cutting position keeps row j alternating");
        let out = AltArray::new(rows)?;
        debug_assert_eq!(out.order, self.order);
        debug_assert_eq!(out.weight(), self.weight());
        Ok(out)
    }

    /// True when no pair of adjacent rows is transposable.
    pub fn is_phi_fixed(&self) -> bool {
        (1..self.k()).all(|m| !self.is_transposable(m, m + 1))
    }

    /// The sign-reversing, weight-preserving involution.
    ///
    /// Fixed points are exactly the arrays with no transposable adjacent
    /// pair. Otherwise, with `m0` the least index whose adjacent pair is
    /// transposable (the length classes strictly increase up to `m0`):
    /// if class `m0` is below class `m0+1`, exchange that pair; if it is
    /// above, take the least `s <= m0` whose class exceeds class `m0+1`
    /// and exchange rows `s, m0+1` — unless that exchange leaves rows
    /// `s-1, s` transposable, in which case exchange rows `s-1, m0+1`
    /// instead. Applying the map twice returns the input.
    pub fn phi(&self) -> AltArray {
        let k = self.k();
        let Some(m0) = (1..k).find(|&m| self.is_transposable(m, m + 1)) else {
            return self.clone();
        };
        let sigma = self.associated_perm().sigma;
        if sigma.at(m0) < sigma.at(m0 + 1) {
            return self
                .transpose_rows(m0, m0 + 1)
                .expect("pair verified transposable");
        }
        let s = (1..=m0)
            .find(|&s| sigma.at(s) > sigma.at(m0 + 1))
            .expect("class at m0 exceeds class at m0+1");
        let swapped = self
            .transpose_rows(s, m0 + 1)
            .expect("inverted length classes are always transposable");
        // The earlier-pair branch needs a row above row s; with s == 1
        // there is none, and the construction falls through to the plain
        // exchange.
        let take_earlier_pair = s >= 2 && swapped.is_transposable(s - 1, s);
        if take_earlier_pair {
            self.transpose_rows(s - 1, m0 + 1)
                .expect("pair implied transposable by the exchange laws")
        } else {
            swapped
        }
    }

    /// Converts a fixed point into a reverse plane partition of the skew
    /// staircase with outer index `n + 2k` and inner index `n`: row `i`,
    /// lowered by `i - 1`, fills the `i`-th ribbon from bottom-left to
    /// top-right. Weights satisfy `|array| = |filling| + N` with `N` the
    /// offset `k(k-1)(6n+8k-1)/6`.
    pub fn to_rpp(&self) -> Result<Filling> {
        if let Some(m) = (1..self.k()).find(|&m| self.is_transposable(m, m + 1)) {
            return Err(Error::NotFixedPoint {
                i: m,
                i_next: m + 1,
            });
        }
        let k = self.k();
        let n = self.order;
        assert_eq!(
            self.associated_perm().sigma,
            Permutation::identity(k),
            "fixed points carry the identity length classes"
        );
        let shape = SkewShape::skew_staircase(n + 2 * k, n)?;
        let mut entries = BTreeMap::new();
        for i in 1..=k {
            let offset = (i - 1) as u32;
            let path = ribbon_reading_path(n + 2 * (i - 1));
            let word = self.row(i).letters();
            debug_assert_eq!(path.len(), word.len());
            for (cell, &x) in path.iter().zip(word) {
                let lowered = x
                    .checked_sub(offset)
                    .expect("fixed point entries are bounded below by their row index");
                entries.insert(*cell, lowered);
            }
        }
        let filling = Filling::new(shape, entries)?;
        debug_assert!(filling.is_rpp());
        Ok(filling)
    }

    /// Inverse of [`AltArray::to_rpp`]: reads each ribbon of a reverse
    /// plane partition of a skew staircase into a word, raised by `i - 1`.
    pub fn from_rpp(filling: &Filling) -> Result<AltArray> {
        let shape = filling.shape();
        let n = shape.inner().len() + 1;
        let total = shape.outer().len() + 1;
        let valid_staircases = *shape.outer() == Partition::staircase(total)
            && *shape.inner() == Partition::staircase(n);
        if !valid_staircases || total <= n || !(total - n).is_multiple_of(2) {
            return Err(Error::NotSkewStaircase(shape.to_string()));
        }
        if !filling.is_rpp() {
            return Err(Error::NotAValidFilling("reverse plane partition"));
        }
        let k = (total - n) / 2;
        let mut rows = Vec::with_capacity(k);
        for i in 1..=k {
            let offset = (i - 1) as u32;
            let letters: Vec<u32> = ribbon_reading_path(n + 2 * (i - 1))
                .into_iter()
                .map(|c| filling.entry(c) + offset)
                .collect();
            rows.push(AltWord::new(letters)?);
        }
        let array = AltArray::new(rows)?;
        debug_assert_eq!(array.order, n);
        debug_assert!(array.is_phi_fixed());
        Ok(array)
    }
}

impl fmt::Display for AltArray {
    /// Header `n=<n> k=<k>` followed by one space-separated word per line.
    /// The grid alignment is reconstructible from the lengths.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={}", self.order, self.k())?;
        for row in &self.rows {
            write!(f, "\n{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AltArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltArray[n={} k={}:", self.order, self.k())?;
        for row in &self.rows {
            write!(f, " ({row})")?;
        }
        write!(f, "]")
    }
}

impl FromStr for AltArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Invalid("missing array header".into()))?;
        let parse_field = |field: &str, key: &str| -> Result<usize> {
            field
                .strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::Invalid(format!("bad header field {field:?}")))
        };
        let mut fields = header.split_whitespace();
        let n = parse_field(
            fields
                .next()
                .ok_or_else(|| Error::Invalid("empty header".into()))?,
            "n=",
        )?;
        let k = parse_field(
            fields
                .next()
                .ok_or_else(|| Error::Invalid("header missing k".into()))?,
            "k=",
        )?;
        let mut rows = Vec::with_capacity(k);
        for line in lines {
            let letters = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Invalid(format!("bad letter {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(AltWord::new(letters)?);
        }
        if rows.len() != k {
            return Err(Error::Invalid(format!(
                "header announces {k} rows, found {}",
                rows.len()
            )));
        }
        let array = AltArray::new(rows)?;
        if array.order() != n {
            return Err(Error::Invalid(format!(
                "header announces order {n}, lengths give {}",
                array.order()
            )));
        }
        Ok(array)
    }
}

/// All cutting positions for two words with explicit grid starts. The
/// overlap is the intersection of the two spans; position `t` is the
/// boundary after `t` overlap columns. Words are assumed alternating.
pub fn cutting_positions_raw(wi: &[u32], si: i64, wj: &[u32], sj: i64) -> Vec<usize> {
    let Some(boundaries) = overlap_boundaries(wi.len(), si, wj.len(), sj) else {
        return Vec::new();
    };
    (0..=boundaries)
        .filter(|&t| swap_keeps_alternating(wi, si, wj, sj, si.max(sj) + t as i64))
        .collect()
}

/// Leftmost cutting position for two words with explicit grid starts.
pub fn first_cutting_position_raw(wi: &[u32], si: i64, wj: &[u32], sj: i64) -> Option<usize> {
    let boundaries = overlap_boundaries(wi.len(), si, wj.len(), sj)?;
    (0..=boundaries).find(|&t| swap_keeps_alternating(wi, si, wj, sj, si.max(sj) + t as i64))
}

/// Number of overlap columns `p`, yielding boundaries `0 ..= p`; `None`
/// when the spans are disjoint.
fn overlap_boundaries(len_i: usize, si: i64, len_j: usize, sj: i64) -> Option<usize> {
    let ei = si + len_i as i64 - 1;
    let ej = sj + len_j as i64 - 1;
    let lo = si.max(sj);
    let hi = ei.min(ej);
    (lo <= hi).then_some((hi - lo + 1) as usize)
}

fn swap_keeps_alternating(wi: &[u32], si: i64, wj: &[u32], sj: i64, cut: i64) -> bool {
    let ci = (cut - si) as usize;
    let cj = (cut - sj) as usize;
    is_alternating(wj[..cj].iter().chain(&wi[ci..]).copied())
        && is_alternating(wi[..ci].iter().chain(&wj[cj..]).copied())
}

/// Visits every array of order `n` with `k` rows, length classes given by
/// `sigma`, and weight at most `max_weight`, in lexicographic row order.
pub fn for_each_in_slice(
    n: usize,
    k: usize,
    sigma: &Permutation,
    max_weight: u64,
    mut visit: impl FnMut(AltArray),
) {
    assert!(n >= 1, "order must be positive");
    assert_eq!(sigma.len(), k, "length-class permutation must act on k rows");
    let lengths: Vec<usize> = (1..=k).map(|i| 2 * (n + i + sigma.at(i)) - 3).collect();
    let mut rows = Vec::with_capacity(k);
    walk_rows(&lengths, n, max_weight, &mut rows, &mut visit);
}

fn walk_rows(
    lengths: &[usize],
    order: usize,
    budget: u64,
    rows: &mut Vec<AltWord>,
    visit: &mut impl FnMut(AltArray),
) {
    if rows.len() == lengths.len() {
        visit(AltArray::from_validated(rows.clone(), order));
        return;
    }
    let len = lengths[rows.len()];
    let mut prefix = Vec::with_capacity(len);
    walk_word(len, budget, &mut prefix, 0, &mut |word, weight| {
        rows.push(AltWord::from_trusted(word.to_vec()));
        walk_rows(lengths, order, budget - weight, rows, visit);
        rows.pop();
    });
}

/// Visits every alternating word of the given length with weight at most
/// `budget`, in lexicographic order.
fn walk_word(
    len: usize,
    budget: u64,
    prefix: &mut Vec<u32>,
    weight: u64,
    visit: &mut dyn FnMut(&[u32], u64),
) {
    if prefix.len() == len {
        visit(prefix, weight);
        return;
    }
    let position = prefix.len() + 1;
    let remaining = budget - weight;
    let (lo, hi) = if position == 1 {
        (0u64, remaining)
    } else {
        let prev = u64::from(*prefix.last().unwrap());
        if position.is_multiple_of(2) {
            (0, prev.min(remaining))
        } else {
            (prev, remaining)
        }
    };
    let mut v = lo;
    while v <= hi {
        prefix.push(v as u32);
        walk_word(len, budget, prefix, weight + v, visit);
        prefix.pop();
        v += 1;
    }
}

fn check_slice_caps(n: usize, k: usize, max_weight: u64) -> Result<()> {
    assert!(n >= 1, "order must be positive");
    if k > ARRAY_K_CAP {
        return Err(Error::CapExceeded {
            what: "array row count",
            value: k,
            cap: ARRAY_K_CAP,
        });
    }
    if max_weight > ARRAY_WEIGHT_CAP {
        return Err(Error::CapExceeded {
            what: "array weight bound",
            value: max_weight as usize,
            cap: ARRAY_WEIGHT_CAP as usize,
        });
    }
    Ok(())
}

/// All length-class permutations of `[k]` in lexicographic order.
fn all_sigmas(k: usize) -> Vec<Permutation> {
    (1..=k)
        .permutations(k)
        .map(|word| Permutation::new(word).expect("permutation by construction"))
        .collect()
}

/// Visits every array of order `n` with `k` rows and weight at most
/// `max_weight`, grouped by length-class permutation (lexicographic), rows
/// lexicographic within each group.
pub fn for_each_bounded(
    n: usize,
    k: usize,
    max_weight: u64,
    mut visit: impl FnMut(AltArray),
) -> Result<()> {
    check_slice_caps(n, k, max_weight)?;
    for sigma in all_sigmas(k) {
        for_each_in_slice(n, k, &sigma, max_weight, &mut visit);
    }
    Ok(())
}

/// Materialized form of [`for_each_bounded`]; prefer the visitor on large
/// slices.
pub fn enumerate_bounded(n: usize, k: usize, max_weight: u64) -> Result<Vec<AltArray>> {
    let mut out = Vec::new();
    for_each_bounded(n, k, max_weight, |a| out.push(a))?;
    Ok(out)
}

/// The signed weight generating function of the weight-bounded slice:
/// the coefficient of `q^w` is the number of weight-`w` arrays of positive
/// sign minus the number of negative sign, truncated at `max_weight`.
pub fn signed_gf(n: usize, k: usize, max_weight: u64) -> Result<QSeries> {
    check_slice_caps(n, k, max_weight)?;
    let mut coeffs = vec![BigInt::from(0); max_weight as usize + 1];
    for sigma in all_sigmas(k) {
        let sign = if sigma.inversions().is_multiple_of(2) { 1 } else { -1 };
        for_each_in_slice(n, k, &sigma, max_weight, |a| {
            coeffs[a.weight() as usize] += sign;
        });
    }
    Ok(QSeries::from_coeffs(max_weight as usize, coeffs))
}

/// Compares the two first-cutting-position routes on every row pair of the
/// array, and checks the transposability criteria: pairs with inverted
/// length classes always transpose; pairs that do not transpose satisfy
/// the strict interlacing, and vice versa.
pub fn check_cutting_consistency(a: &AltArray) -> std::result::Result<(), String> {
    let sigma = a.associated_perm().sigma;
    for i in 1..=a.k() {
        for j in i + 1..=a.k() {
            let (si, _) = a.span(i);
            let (sj, _) = a.span(j);
            let scan = first_cutting_position_raw(a.row(i).letters(), si, a.row(j).letters(), sj);
            let by_inequalities = a.first_cutting_position_by_inequalities(i, j);
            if scan != by_inequalities {
                return Err(format!(
                    "cutting routes disagree on rows {i},{j} ({scan:?} vs {by_inequalities:?}) of\n{a}"
                ));
            }
            let inverted = sigma.at(i) > sigma.at(j);
            match scan {
                None => {
                    if inverted {
                        return Err(format!(
                            "rows {i},{j} have inverted classes but no cutting position in\n{a}"
                        ));
                    }
                    if !a.interlacing_holds(i, j) {
                        return Err(format!(
                            "rows {i},{j} are not transposable but fail the interlacing in\n{a}"
                        ));
                    }
                }
                Some(_) => {
                    if !inverted && a.interlacing_holds(i, j) {
                        return Err(format!(
                            "rows {i},{j} interlace but still have a cutting position in\n{a}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the exchange laws on every row triple `i < j < l` whose length
/// classes and transposability match their hypotheses:
///
/// 1. classes `i < j < l`, rows `i,j` blocked, rows `j,l` transposable:
///    rows `i,j` stay blocked after exchanging `j,l`;
/// 2. classes `i < l < j`, rows `i,j` blocked: if exchanging `j,l` frees
///    rows `i,j`, then rows `i,l` were transposable all along and
///    exchanging them keeps rows `i,j` blocked;
/// 3. classes `l < i < j`, rows `i,j` blocked: exchanging `i,l` keeps
///    rows `i,j` blocked, and then exchanging `j,l` frees them.
pub fn check_exchange_consistency(a: &AltArray) -> std::result::Result<(), String> {
    let sigma = a.associated_perm().sigma;
    let k = a.k();
    for i in 1..=k {
        for j in i + 1..=k {
            for l in j + 1..=k {
                let (ci, cj, cl) = (sigma.at(i), sigma.at(j), sigma.at(l));
                if a.is_transposable(i, j) {
                    continue;
                }
                if ci < cj && cj < cl && a.is_transposable(j, l) {
                    let t = a.transpose_rows(j, l).map_err(|e| e.to_string())?;
                    if t.is_transposable(i, j) {
                        return Err(format!(
                            "rows {i},{j} became transposable after exchanging {j},{l} in\n{a}"
                        ));
                    }
                } else if ci < cl && cl < cj {
                    if !a.is_transposable(j, l) {
                        return Err(format!(
                            "rows {j},{l} have inverted classes but are blocked in\n{a}"
                        ));
                    }
                    let t = a.transpose_rows(j, l).map_err(|e| e.to_string())?;
                    if t.is_transposable(i, j) {
                        if !a.is_transposable(i, l) {
                            return Err(format!(
                                "freeing rows {i},{j} via {j},{l} without rows {i},{l} transposable in\n{a}"
                            ));
                        }
                        let u = a.transpose_rows(i, l).map_err(|e| e.to_string())?;
                        if u.is_transposable(i, j) {
                            return Err(format!(
                                "rows {i},{j} became transposable after exchanging {i},{l} in\n{a}"
                            ));
                        }
                    }
                } else if cl < ci && ci < cj {
                    if !a.is_transposable(i, l) {
                        return Err(format!(
                            "rows {i},{l} have inverted classes but are blocked in\n{a}"
                        ));
                    }
                    let u = a.transpose_rows(i, l).map_err(|e| e.to_string())?;
                    if u.is_transposable(i, j) {
                        return Err(format!(
                            "rows {i},{j} became transposable after exchanging {i},{l} in\n{a}"
                        ));
                    }
                    let v = u.transpose_rows(j, l).map_err(|e| e.to_string())?;
                    if !v.is_transposable(i, j) {
                        return Err(format!(
                            "rows {i},{j} still blocked after exchanging {i},{l} then {j},{l} in\n{a}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Aggregate of an involution sweep over one weight-bounded slice.
#[derive(Clone, Debug)]
pub struct InvolutionSummary {
    pub order: usize,
    pub k: usize,
    pub max_weight: u64,
    pub arrays: u64,
    pub fixed_points: u64,
    pub cancelled_pairs: u64,
    /// Signed weight generating function of the slice.
    pub signed: QSeries,
    /// Weight generating function of the fixed points alone.
    pub fixed: QSeries,
}

/// Runs the full invariant battery on every array of the slice: the map is
/// an involution, preserves weight and order, reverses the sign off fixed
/// points; fixed points carry the identity length classes; both cutting
/// routes agree on every pair; the exchange laws hold on every triple; and
/// the signed generating function equals the fixed-point one.
pub fn check_involution_on_slice(n: usize, k: usize, max_weight: u64) -> Result<InvolutionSummary> {
    check_slice_caps(n, k, max_weight)?;
    let degree = max_weight as usize;
    let mut arrays = 0u64;
    let mut fixed_points = 0u64;
    let mut signed = vec![BigInt::from(0); degree + 1];
    let mut fixed = vec![BigInt::from(0); degree + 1];
    let mut violation: Option<String> = None;

    for sigma in all_sigmas(k) {
        for_each_in_slice(n, k, &sigma, max_weight, |a| {
            if violation.is_some() {
                return;
            }
            if let Err(msg) = check_array(&a) {
                violation = Some(msg);
                return;
            }
            arrays += 1;
            let w = a.weight() as usize;
            signed[w] += a.sign() as i64;
            if a.is_phi_fixed() {
                fixed_points += 1;
                fixed[w] += 1;
            }
        });
    }
    if let Some(msg) = violation {
        return Err(Error::Invalid(msg));
    }

    let signed = QSeries::from_coeffs(degree, signed);
    let fixed = QSeries::from_coeffs(degree, fixed);
    if signed != fixed {
        return Err(Error::Invalid(format!(
            "signed slice sum {signed} differs from fixed-point sum {fixed}"
        )));
    }
    debug_assert_eq!((arrays - fixed_points) % 2, 0);
    Ok(InvolutionSummary {
        order: n,
        k,
        max_weight,
        arrays,
        fixed_points,
        cancelled_pairs: (arrays - fixed_points) / 2,
        signed,
        fixed,
    })
}

fn check_array(a: &AltArray) -> std::result::Result<(), String> {
    let image = a.phi();
    if image.phi() != *a {
        return Err(format!("applying the map twice does not return\n{a}"));
    }
    if image.weight() != a.weight() {
        return Err(format!("weight not preserved on\n{a}"));
    }
    if image.order() != a.order() {
        return Err(format!("order not preserved on\n{a}"));
    }
    let is_fixed = a.is_phi_fixed();
    if is_fixed != (image == *a) {
        return Err(format!("fixed-point status inconsistent on\n{a}"));
    }
    if is_fixed {
        if a.associated_perm().sigma != Permutation::identity(a.k()) {
            return Err(format!("fixed point without identity classes\n{a}"));
        }
    } else if image.sign() != -a.sign() {
        return Err(format!("sign not reversed on\n{a}"));
    }
    check_cutting_consistency(a)?;
    check_exchange_consistency(a)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[u32]) -> AltWord {
        AltWord::new(letters.to_vec()).unwrap()
    }

    fn array(rows: &[&[u32]]) -> AltArray {
        AltArray::new(rows.iter().map(|r| word(r)).collect()).unwrap()
    }

    /// Three-row worked example used throughout: order 1, classes 2 3 1.
    fn worked_example() -> AltArray {
        array(&[
            &[3, 3, 4, 2, 2],
            &[5, 4, 6, 5, 7, 4, 5, 4, 5],
            &[1, 1, 3, 1, 1, 1, 3],
        ])
    }

    #[test]
    fn alt_word_validation() {
        assert!(AltWord::new(vec![3, 1, 4, 1, 5]).is_ok());
        assert!(AltWord::new(vec![1, 2, 1]).is_err());
        assert!(AltWord::new(vec![2, 2, 2]).is_ok());
        assert!(AltWord::new(vec![]).is_ok());
        assert!(AltWord::new(vec![0, 1]).is_err());
        assert!(AltWord::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn order_of_examples() {
        let rows = [word(&[3, 3, 4, 2, 2]), word(&[5, 4, 6, 5, 7, 4, 5, 4, 5]), word(&[1, 1, 3, 1, 1, 1, 3])];
        assert_eq!(order_of(&rows).unwrap(), 1);

        assert_eq!(order_of(&[word(&[1, 0, 2])]).unwrap(), 1);

        let bad = [word(&[1, 0, 2]), word(&[2, 1, 3, 1, 4])];
        assert!(matches!(order_of(&bad), Err(Error::NoValidOrder(_))));
    }

    #[test]
    fn associated_perm_examples() {
        let a = worked_example();
        assert_eq!(a.associated_perm().sigma.word(), &[2, 3, 1]);
        assert_eq!(a.sign(), 1);

        // Ascending length classes give the identity with positive sign.
        let id = array(&[&[0, 0, 0], &[0, 0, 0, 0, 0, 0, 0]]);
        assert_eq!(id.associated_perm().sigma.word(), &[1, 2]);
        assert_eq!(id.sign(), 1);

        // Both rows of length 2n+3 at n=1: classes inverted, negative sign.
        let swapped = array(&[&[0, 0, 0, 0, 0], &[0, 0, 0, 0, 0]]);
        assert_eq!(swapped.associated_perm().sigma.word(), &[2, 1]);
        assert_eq!(swapped.sign(), -1);
    }

    #[test]
    fn cutting_positions_of_worked_example() {
        let a = worked_example();
        assert_eq!(a.cutting_positions(1, 3), vec![2, 3]);
        assert_eq!(a.first_cutting_position(1, 3), Some(2));
        assert!(a.is_transposable(1, 3));
    }

    #[test]
    fn identical_aligned_words_cut_at_zero() {
        let w = [2, 1, 3];
        assert_eq!(first_cutting_position_raw(&w, 0, &w, 0), Some(0));
        assert!(cutting_positions_raw(&w, 0, &w, 0).contains(&0));
    }

    #[test]
    fn disjoint_spans_have_no_positions() {
        assert!(cutting_positions_raw(&[1, 0, 2], 0, &[3, 1, 4], 10).is_empty());
    }

    #[test]
    fn interlaced_pair_is_not_transposable() {
        let a = array(&[&[0, 0, 0], &[1, 1, 1, 1, 1, 1, 1]]);
        // Classes 1 < 2 with every peak of row 1 strictly under row 2.
        assert_eq!(a.first_cutting_position(1, 2), None);
        assert!(!a.is_transposable(1, 2));
        assert!(a.interlacing_holds(1, 2));
        assert!(a.is_phi_fixed());
        assert_eq!(a.phi(), a);
    }

    #[test]
    fn transpose_worked_example_rows_one_three() {
        let a = worked_example();
        let t = a.transpose_rows(1, 3).unwrap();
        assert_eq!(
            t,
            array(&[
                &[1, 1, 2],
                &[5, 4, 6, 5, 7, 4, 5, 4, 5],
                &[3, 3, 4, 2, 3, 1, 1, 1, 3],
            ])
        );
        assert_eq!(t.weight(), a.weight());
        assert_eq!(t.order(), a.order());
        assert_eq!(t.sign(), -a.sign());
        // Exchanging again restores the original.
        assert_eq!(t.transpose_rows(1, 3).unwrap(), a);
    }

    #[test]
    fn transpose_errors_on_blocked_pair() {
        let a = array(&[&[0, 0, 0], &[1, 1, 1, 1, 1, 1, 1]]);
        assert!(matches!(
            a.transpose_rows(1, 2),
            Err(Error::NotTransposable { i: 1, j: 2 })
        ));
    }

    #[test]
    fn phi_fixes_single_row_arrays() {
        let a = array(&[&[4, 0, 9]]);
        assert_eq!(a.phi(), a);
        assert!(a.is_phi_fixed());
    }

    #[test]
    fn phi_on_worked_example_reverses_sign() {
        let a = worked_example();
        let image = a.phi();
        assert_ne!(image, a);
        assert_eq!(image.weight(), a.weight());
        assert_eq!(image.sign(), -a.sign());
        assert_eq!(image.phi(), a);
    }

    #[test]
    fn involution_on_small_slice() {
        // Every array of order 1 with two rows and weight at most 5.
        let slice = enumerate_bounded(1, 2, 5).unwrap();
        for a in &slice {
            let image = a.phi();
            assert_eq!(image.phi(), *a, "{a}");
            assert_eq!(image.weight(), a.weight());
            if image != *a {
                assert_eq!(image.sign(), -a.sign(), "{a}");
            }
        }
        // Exchanging any transposable pair twice restores the array.
        for a in &slice {
            for i in 1..=a.k() {
                for j in i + 1..=a.k() {
                    if a.is_transposable(i, j) {
                        let t = a.transpose_rows(i, j).unwrap();
                        assert_eq!(t.transpose_rows(i, j).unwrap(), *a, "{a}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_bounded_examples() {
        let arrays = enumerate_bounded(1, 1, 1).unwrap();
        let rows: Vec<&[u32]> = arrays.iter().map(|a| a.row(1).letters()).collect();
        assert_eq!(rows, vec![&[0, 0, 0][..], &[0, 0, 1], &[1, 0, 0]]);

        assert_eq!(enumerate_bounded(1, 1, 0).unwrap().len(), 1);

        // Two weight-0 arrays at k = 2: the all-zero rows fit both
        // length-class permutations.
        assert_eq!(enumerate_bounded(1, 2, 0).unwrap().len(), 2);

        assert!(matches!(
            enumerate_bounded(1, 4, 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn signed_gf_examples() {
        assert_eq!(signed_gf(1, 1, 2).unwrap(), QSeries::from_ints(2, &[1, 2, 3]));
        // The two weight-0 arrays at k = 2 carry opposite signs.
        assert_eq!(*signed_gf(1, 2, 0).unwrap().coeff(0), BigInt::from(0));
    }

    #[test]
    fn fixed_point_to_rpp_single_row() {
        let a = array(&[&[2, 1, 4]]);
        let f = a.to_rpp().unwrap();
        assert_eq!(f.shape().to_string(), "2,1/-");
        assert_eq!(a.weight(), f.weight());
        assert_eq!(AltArray::from_rpp(&f).unwrap(), a);
    }

    #[test]
    fn minimal_fixed_point_maps_to_zero_filling() {
        let a = array(&[&[0, 0, 0], &[1, 1, 1, 1, 1, 1, 1]]);
        let f = a.to_rpp().unwrap();
        assert_eq!(f.shape().to_string(), "4,3,2,1/-");
        assert_eq!(f.weight(), 0);
        assert_eq!(a.weight(), 7); // weight drops by the offset
        assert_eq!(AltArray::from_rpp(&f).unwrap(), a);
    }

    #[test]
    fn to_rpp_rejects_non_fixed_arrays() {
        let a = worked_example();
        assert!(matches!(a.to_rpp(), Err(Error::NotFixedPoint { .. })));
    }

    #[test]
    fn rpp_round_trip_on_fixed_points() {
        let mut fixed_seen = 0;
        for a in enumerate_bounded(1, 2, 9).unwrap() {
            if !a.is_phi_fixed() {
                continue;
            }
            fixed_seen += 1;
            let f = a.to_rpp().unwrap();
            assert!(f.is_rpp());
            assert_eq!(a.weight(), f.weight() + 7);
            assert_eq!(AltArray::from_rpp(&f).unwrap(), a);
        }
        assert!(fixed_seen > 0);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a = worked_example();
        let text = a.to_string();
        assert!(text.starts_with("n=1 k=3\n"));
        let back: AltArray = text.parse().unwrap();
        assert_eq!(back, a);

        assert!("n=1 k=2\n0 0 0".parse::<AltArray>().is_err());
        assert!("n=2 k=1\n0 0 0".parse::<AltArray>().is_err());
    }

    #[test]
    fn consistency_checks_pass_on_small_slice() {
        for a in enumerate_bounded(1, 3, 3).unwrap() {
            check_cutting_consistency(&a).unwrap();
            check_exchange_consistency(&a).unwrap();
        }
    }

    #[test]
    fn involution_summary_counts() {
        let summary = check_involution_on_slice(1, 2, 5).unwrap();
        assert_eq!(summary.arrays, summary.fixed_points + 2 * summary.cancelled_pairs);
        assert_eq!(summary.signed, summary.fixed);
        assert!(matches!(
            check_involution_on_slice(1, 2, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }
}
