//! Excited diagrams, pleasant diagrams, and the hook-length formulas for
//! skew shapes built on them.
//!
//! An excited diagram of `outer/inner` is any cell set reachable from the
//! diagram of `inner` by repeatedly replacing an active cell `(i, j)` with
//! `(i+1, j+1)`; a cell is active when its three lower-right neighbors all
//! lie in `outer` and none is occupied. A pleasant diagram is any subset of
//! the complement of some excited diagram. Sums over these two families
//! give the standard-tableau count of the skew shape and the q-series
//! refinements checked against the brute-force oracles in [`crate::tableaux`].

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::shapes::{Cell, Partition, SkewShape};

/// Cap on |outer| for pleasant-diagram enumeration (subsets are
/// materialized as bitmasks over the outer shape's cells).
pub const PLEASANT_CAP: usize = 16;

/// A set of cells of `outer` reachable from the inner shape's diagram by
/// excited moves. Cardinality always equals |inner|.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExcitedDiagram {
    outer: Partition,
    cells: BTreeSet<Cell>,
}

impl ExcitedDiagram {
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells on which an excited move can act: all three lower-right
    /// neighbors inside `outer` and none of them occupied.
    pub fn active_cells(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .copied()
            .filter(|&c| {
                let right = Cell::new(c.row, c.col + 1);
                let below = Cell::new(c.row + 1, c.col);
                let diag = Cell::new(c.row + 1, c.col + 1);
                [right, below, diag].into_iter().all(|n| {
                    self.outer.contains_cell(n) && !self.cells.contains(&n)
                })
            })
            .collect()
    }

    /// The complement `outer \ cells`, row-major.
    pub fn complement(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|c| !self.cells.contains(c))
            .collect()
    }
}

impl std::fmt::Debug for ExcitedDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.cells.iter()).finish()
    }
}

/// All excited diagrams of `outer/inner`, as the closure of the inner
/// diagram under single excited moves. Breadth-first with deduplication;
/// output sorted by cell set, so the order is deterministic.
pub fn enumerate_excited(outer: &Partition, inner: &Partition) -> Result<Vec<ExcitedDiagram>> {
    // Validates containment.
    SkewShape::new(outer.clone(), inner.clone())?;

    let start: BTreeSet<Cell> = inner.cells().into_iter().collect();
    let mut seen: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
    let mut queue: VecDeque<BTreeSet<Cell>> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);

    while let Some(cells) = queue.pop_front() {
        let diagram = ExcitedDiagram {
            outer: outer.clone(),
            cells: cells.clone(),
        };
        for active in diagram.active_cells() {
            let mut next = cells.clone();
            next.remove(&active);
            next.insert(Cell::new(active.row + 1, active.col + 1));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }

    Ok(seen
        .into_iter()
        .map(|cells| ExcitedDiagram {
            outer: outer.clone(),
            cells,
        })
        .collect())
}

/// All pleasant diagrams of `outer/inner`: subsets of the complement of
/// some excited diagram, each listed once. Subsets are handled as bitmasks
/// over the row-major cells of `outer`, hence the cap.
pub fn enumerate_pleasant(outer: &Partition, inner: &Partition) -> Result<Vec<BTreeSet<Cell>>> {
    let n = outer.size();
    if n > PLEASANT_CAP {
        return Err(Error::CapExceeded {
            what: "pleasant diagram enumeration",
            value: n,
            cap: PLEASANT_CAP,
        });
    }
    let all_cells = outer.cells();
    let index: HashMap<Cell, usize> = all_cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut masks: HashSet<u32> = HashSet::new();
    for diagram in enumerate_excited(outer, inner)? {
        let mut complement: u32 = 0;
        for cell in diagram.complement() {
            complement |= 1 << index[&cell];
        }
        // Walk every submask of the complement, including 0.
        let mut s = complement;
        loop {
            masks.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & complement;
        }
    }

    let mut sorted: Vec<u32> = masks.into_iter().collect();
    sorted.sort_unstable();
    Ok(sorted
        .into_iter()
        .map(|mask| {
            all_cells
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect())
}

/// Number of standard Young tableaux of the skew shape via the excited
/// diagram expansion: `|outer/inner|! * sum_D prod_{u not in D} 1/h_u`,
/// evaluated in exact rational arithmetic.
pub fn naruse_count(outer: &Partition, inner: &Partition) -> Result<BigInt> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut sum = BigRational::zero();
    for diagram in enumerate_excited(outer, inner)? {
        let mut hook_product: BigInt = One::one();
        for cell in diagram.complement() {
            hook_product *= outer.hook_length(cell).expect("cell from shape");
        }
        sum += BigRational::new(One::one(), hook_product);
    }
    let mut factorial: BigInt = One::one();
    for v in 1..=shape.size() {
        factorial *= v;
    }
    let result = sum * BigRational::from_integer(factorial);
    assert!(
        result.is_integer() && !result.is_negative(),
        "excited-diagram sum must produce a nonnegative integer"
    );
    Ok(result.to_integer())
}

/// Per-hook factor cache so repeated hooks share one series inversion.
struct HookFactors {
    degree: usize,
    cache: HashMap<usize, QSeries>,
}

impl HookFactors {
    fn new(degree: usize) -> Self {
        HookFactors {
            degree,
            cache: HashMap::new(),
        }
    }

    /// `1 / (1 - q^h)`.
    fn geometric(&mut self, h: usize) -> QSeries {
        let degree = self.degree;
        self.cache
            .entry(h)
            .or_insert_with(|| {
                QSeries::one_minus_q_pow(degree, h)
                    .inv_unit()
                    .expect("unit constant term")
            })
            .clone()
    }
}

/// Generating function of semistandard tableaux of the skew shape by entry
/// sum, from the excited diagram expansion, truncated at `degree`.
///
/// The expansion counts fillings whose entries start at 0; tableaux here
/// have entries starting at 1, which shifts the whole series by
/// `q^|outer/inner|`.
pub fn ssyt_gf_excited(outer: &Partition, inner: &Partition, degree: usize) -> Result<QSeries> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let conjugate = outer.conjugate();
    let mut factors = HookFactors::new(degree);

    let mut total = QSeries::zero(degree);
    for diagram in enumerate_excited(outer, inner)? {
        let mut term = QSeries::one(degree);
        for cell in diagram.complement() {
            let h = outer.hook_length(cell).expect("cell from shape");
            let power = conjugate.part(cell.col) - cell.row;
            term = term.mul(&factors.geometric(h)).shifted(power);
        }
        total = total.add(&term);
    }
    Ok(total.shifted(shape.size()))
}

/// Generating function of reverse plane partitions of the skew shape by
/// entry sum, as a sum over pleasant diagrams of products of
/// `q^h / (1 - q^h)`, truncated at `degree`.
pub fn rpp_gf_pleasant(outer: &Partition, inner: &Partition, degree: usize) -> Result<QSeries> {
    let mut factors = HookFactors::new(degree);
    let mut total = QSeries::zero(degree);
    for subset in enumerate_pleasant(outer, inner)? {
        let mut term = QSeries::one(degree);
        for cell in subset {
            let h = outer.hook_length(cell).expect("cell from shape");
            term = term.mul(&factors.geometric(h)).shifted(h);
        }
        total = total.add(&term);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{count_syt_brute, count_syt_hook, rpp_gf_brute, ssyt_gf_brute};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn diagram(outer: &[usize], cells: &[(usize, usize)]) -> ExcitedDiagram {
        ExcitedDiagram {
            outer: p(outer),
            cells: cells.iter().map(|&(r, c)| Cell::new(r, c)).collect(),
        }
    }

    #[test]
    fn active_cells_examples() {
        let d = diagram(&[2, 2], &[(1, 1)]);
        assert_eq!(d.active_cells(), vec![Cell::new(1, 1)]);

        let d = diagram(&[2, 1], &[(1, 1)]);
        assert!(d.active_cells().is_empty());

        let d = diagram(&[3, 2], &[]);
        assert!(d.active_cells().is_empty());
    }

    #[test]
    fn enumerate_excited_examples() {
        let e = enumerate_excited(&p(&[2, 2]), &p(&[1])).unwrap();
        let sets: Vec<Vec<Cell>> = e.iter().map(|d| d.cells().iter().copied().collect()).collect();
        assert_eq!(
            sets,
            vec![vec![Cell::new(1, 1)], vec![Cell::new(2, 2)]]
        );

        let e = enumerate_excited(&p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!(e.len(), 1);

        let e = enumerate_excited(&p(&[3, 1]), &Partition::empty()).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[0].cells().is_empty());
    }

    #[test]
    fn excited_diagrams_preserve_cardinality() {
        for (outer, inner) in [(&[4, 3, 1][..], &[2, 1][..]), (&[3, 3, 3], &[2, 2]), (&[4, 2], &[1])] {
            let inner = p(inner);
            for d in enumerate_excited(&p(outer), &inner).unwrap() {
                assert_eq!(d.cells().len(), inner.size());
            }
        }
    }

    #[test]
    fn enumerate_pleasant_examples() {
        let pl = enumerate_pleasant(&p(&[1]), &Partition::empty()).unwrap();
        assert_eq!(pl.len(), 2);

        let pl = enumerate_pleasant(&p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!(pl.len(), 4);

        let pl = enumerate_pleasant(&p(&[2, 2]), &p(&[1])).unwrap();
        assert_eq!(pl.len(), 12);
    }

    #[test]
    fn pleasant_contains_empty_set_and_singletons() {
        let outer = p(&[3, 2, 1]);
        let inner = p(&[1]);
        let pl = enumerate_pleasant(&outer, &inner).unwrap();
        assert!(pl.iter().any(|s| s.is_empty()));
        for d in enumerate_excited(&outer, &inner).unwrap() {
            for cell in d.complement() {
                let singleton: BTreeSet<Cell> = [cell].into_iter().collect();
                assert!(pl.contains(&singleton));
            }
        }
    }

    #[test]
    fn pleasant_cap_is_enforced() {
        let outer = Partition::staircase(7); // 21 cells
        assert!(matches!(
            enumerate_pleasant(&outer, &Partition::empty()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn naruse_count_examples() {
        assert_eq!(naruse_count(&p(&[2, 1]), &p(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(naruse_count(&p(&[2, 2]), &p(&[1])).unwrap(), BigInt::from(2));
        // Empty inner shape reduces to the straight hook length formula.
        for lam in [&[3, 2][..], &[4, 2, 1], &[2, 2, 2]] {
            let lam = p(lam);
            assert_eq!(
                naruse_count(&lam, &Partition::empty()).unwrap(),
                count_syt_hook(&lam)
            );
        }
    }

    #[test]
    fn naruse_matches_brute_on_small_sweep() {
        use crate::shapes::{partitions_of, sub_partitions};
        for n in 0..=6 {
            for outer in partitions_of(n) {
                for inner in sub_partitions(&outer) {
                    let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                    assert_eq!(
                        naruse_count(&outer, &inner).unwrap(),
                        count_syt_brute(&shape).unwrap(),
                        "shape {shape}"
                    );
                }
            }
        }
    }

    #[test]
    fn ssyt_gf_excited_examples() {
        for (outer, inner, degree) in [
            (&[1][..], &[][..], 3usize),
            (&[1, 1], &[], 4),
            (&[2, 1], &[1], 6),
        ] {
            let outer = p(outer);
            let inner = p(inner);
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            assert_eq!(
                ssyt_gf_excited(&outer, &inner, degree).unwrap(),
                ssyt_gf_brute(&shape, degree),
                "shape {shape}"
            );
        }
    }

    #[test]
    fn rpp_gf_pleasant_examples() {
        assert_eq!(
            rpp_gf_pleasant(&p(&[2, 1]), &Partition::empty(), 4).unwrap(),
            QSeries::from_ints(4, &[1, 2, 3, 5, 7])
        );
        let shape = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(
            rpp_gf_pleasant(&p(&[2, 1]), &p(&[1]), 4).unwrap(),
            rpp_gf_brute(&shape, 4)
        );
        // q^0 coefficient is always 1 (the empty subset term).
        let gf = rpp_gf_pleasant(&p(&[3, 1]), &p(&[1]), 5).unwrap();
        assert_eq!(*gf.coeff(0), BigInt::from(1));
    }
}
