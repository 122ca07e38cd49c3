//! Randomized invariants across the crate: series algebra laws, the
//! determinant against cofactor expansion, conjugation and hook symmetry,
//! ribbon reading as a weight-preserving bijection, and the involution on
//! randomly generated staircase arrays.

use num_bigint::BigInt;
use proptest::prelude::*;

use rppq_core::arrays::{AltArray, AltWord};
use rppq_core::qeuler::Permutation;
use rppq_core::qseries::{det, QSeries};
use rppq_core::shapes::{Partition, SkewShape};
use rppq_core::tableaux::{ribbon_to_word, rpp_gf_brute, word_to_ribbon};

fn qseries_strategy(trunc: usize) -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(-5i64..=5, trunc + 1)
        .prop_map(move |coeffs| QSeries::from_ints(trunc, &coeffs))
}

fn unit_qseries_strategy(trunc: usize) -> impl Strategy<Value = QSeries> {
    (qseries_strategy(trunc), proptest::bool::ANY).prop_map(move |(s, negative)| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = if negative { BigInt::from(-1) } else { BigInt::from(1) };
        QSeries::from_coeffs(trunc, coeffs)
    })
}

fn partition_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=4, 0..=4).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_size
        });
        Partition::new(parts).expect("sorted decreasing")
    })
}

/// Forces a raw letter vector into the zigzag shape position by position.
fn make_alternating(raw: Vec<u32>) -> Vec<u32> {
    let mut out = raw;
    for i in 1..out.len() {
        let position = i + 1;
        if position % 2 == 0 {
            out[i] = out[i].min(out[i - 1]);
        } else {
            out[i] = out[i].max(out[i - 1]);
        }
    }
    out
}

fn alt_array_strategy() -> impl Strategy<Value = AltArray> {
    (1usize..=2, 1usize..=3)
        .prop_flat_map(|(n, k)| {
            let sigma = Just((1..=k).collect::<Vec<_>>()).prop_shuffle();
            (Just(n), Just(k), sigma)
        })
        .prop_flat_map(|(n, k, sigma)| {
            let lengths: Vec<usize> = (1..=k).map(|i| 2 * (n + i + sigma[i - 1]) - 3).collect();
            lengths
                .into_iter()
                .map(|l| proptest::collection::vec(0u32..=3, l))
                .collect::<Vec<_>>()
        })
        .prop_map(|raw_rows| {
            let rows = raw_rows
                .into_iter()
                .map(|raw| AltWord::new(make_alternating(raw)).expect("repaired to zigzag"))
                .collect();
            AltArray::new(rows).expect("lengths chosen from a length-class permutation")
        })
}

proptest! {
    #[test]
    fn mul_is_commutative(a in qseries_strategy(8), b in qseries_strategy(8)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_is_associative(
        a in qseries_strategy(6),
        b in qseries_strategy(6),
        c in qseries_strategy(6),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn unit_series_invert_exactly(a in unit_qseries_strategy(8)) {
        let inv = a.inv_unit().unwrap();
        prop_assert_eq!(a.mul(&inv), QSeries::one(8));
    }

    #[test]
    fn det_matches_cofactor_expansion_3x3(
        entries in proptest::collection::vec(qseries_strategy(5), 9),
    ) {
        let m: Vec<Vec<QSeries>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let det2 = |a: &QSeries, b: &QSeries, c: &QSeries, d: &QSeries| {
            a.mul(d).sub(&b.mul(c))
        };
        let expected = m[0][0]
            .mul(&det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]))
            .sub(&m[0][1].mul(&det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2])))
            .add(&m[0][2].mul(&det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1])));
        prop_assert_eq!(det(&m).unwrap(), expected);
    }

    #[test]
    fn conjugate_is_involutive(p in partition_strategy(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn skew_cell_count_is_size_difference(outer in partition_strategy(10)) {
        for inner in rppq_core::shapes::sub_partitions(&outer) {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            prop_assert_eq!(shape.cells().len(), outer.size() - inner.size());
        }
    }

    #[test]
    fn rpp_gf_has_nonnegative_coefficients_and_unit_constant(
        outer in partition_strategy(5),
    ) {
        let gf = rpp_gf_brute(&SkewShape::straight(outer), 6);
        prop_assert_eq!(gf.coeff(0), &BigInt::from(1));
        for c in gf.coeffs() {
            prop_assert!(c >= &BigInt::from(0));
        }
    }

    #[test]
    fn ribbon_reading_preserves_weight_and_round_trips(
        n in 1usize..=4,
        raw in proptest::collection::vec(0u32..=5, 9),
    ) {
        let word = AltWord::new(make_alternating(raw[..2 * n + 1].to_vec())).unwrap();
        let filling = word_to_ribbon(&word, n).unwrap();
        prop_assert!(filling.is_rpp());
        prop_assert_eq!(filling.weight(), word.weight());
        prop_assert_eq!(ribbon_to_word(&filling).unwrap(), word);
    }

    #[test]
    fn involution_holds_on_random_arrays(a in alt_array_strategy()) {
        let image = a.phi();
        prop_assert_eq!(image.phi(), a.clone());
        prop_assert_eq!(image.weight(), a.weight());
        prop_assert_eq!(image.order(), a.order());
        if image == a {
            prop_assert_eq!(
                a.associated_perm().sigma,
                Permutation::identity(a.k())
            );
        } else {
            prop_assert_eq!(i32::from(image.sign()), -i32::from(a.sign()));
        }
    }

    #[test]
    fn transposition_is_self_inverse_on_random_arrays(a in alt_array_strategy()) {
        for i in 1..=a.k() {
            for j in i + 1..=a.k() {
                if a.is_transposable(i, j) {
                    let t = a.transpose_rows(i, j).unwrap();
                    prop_assert_eq!(t.weight(), a.weight());
                    prop_assert_eq!(t.transpose_rows(i, j).unwrap(), a.clone());
                }
            }
        }
    }
}
