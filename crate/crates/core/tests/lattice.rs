use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qfc_core::lattice::{
    extend_to_basis, group_of, hnf, is_direct_summand, saturation, snf, torsion_witness, ExponentVector, IntMatrix,
};

fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_i64_rows(rows, cols).unwrap()
}

fn rows_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=3, 1usize..=4)
        .prop_flat_map(|(n, k)| (Just(n), prop::collection::vec(prop::collection::vec(-6i64..=6, n), k)))
}

#[test]
fn hnf_of_small_example() {
    let m = matrix(&[vec![2, 4], vec![6, 8]], 2);
    let (h, u) = hnf(&m);
    assert_eq!(u.mul(&m).unwrap(), h);
    assert!(u.is_unimodular());
    assert_eq!(h.to_i64_rows().unwrap(), vec![vec![2, 0], vec![0, 4]]);
}

#[test]
fn smith_divisors_of_diagonal_multiple() {
    let m = matrix(&[vec![2, 0], vec![0, 3]], 2);
    let divisors: Vec<BigInt> = snf(&m).elementary_divisors();
    assert_eq!(divisors, vec![BigInt::one(), BigInt::from(6)]);
}

#[test]
fn torsion_of_even_sublattice() {
    let h = group_of(&[ExponentVector::from([2, 0]), ExponentVector::from([0, 1])]).unwrap();
    assert!(!is_direct_summand(&h));
    let (t, m) = torsion_witness(&h).unwrap();
    assert_eq!(m, BigInt::from(2));
    assert!(!h.contains(&t));
    let scaled: Vec<BigInt> = t.iter().map(|a| a * &m).collect();
    assert!(h.contains(&scaled));
}

proptest! {
    #[test]
    fn hnf_is_a_unimodular_row_transform((n, rows) in rows_strategy()) {
        let m = matrix(&rows, n);
        let (h, u) = hnf(&m);
        prop_assert!(u.is_unimodular());
        prop_assert_eq!(u.mul(&m).unwrap(), h);
    }

    #[test]
    fn smith_form_factorises((n, rows) in rows_strategy()) {
        let m = matrix(&rows, n);
        let s = snf(&m);
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn saturation_contains_group_with_same_rank((n, rows) in rows_strategy()) {
        let gens: Vec<ExponentVector> = rows.into_iter().map(ExponentVector::new).collect();
        let h = group_of(&gens).unwrap();
        let s = saturation(&h);
        prop_assert!(s.includes(&h));
        prop_assert_eq!(s.rank(), h.rank());
        prop_assert!(is_direct_summand(&s));
        prop_assert_eq!(is_direct_summand(&h), h.includes(&s));
        let (c, r) = extend_to_basis(&s).unwrap();
        prop_assert_eq!(r, s.rank());
        prop_assert!(c.is_unimodular());
        prop_assert_eq!(c.ncols(), n);
        for i in 0..r {
            prop_assert!(s.contains(c.row(i)));
        }
    }
}
