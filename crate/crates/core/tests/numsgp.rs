use proptest::prelude::*;

use qfc_core::numsgp::NumericalSemigroup;

#[test]
fn classic_invariants() {
    let s = NumericalSemigroup::from_generators(&[6, 9, 20]).unwrap();
    assert_eq!(s.frobenius(), 43);
    let s = NumericalSemigroup::from_generators(&[5, 7]).unwrap();
    // (a-1)(b-1)/2 gaps, Frobenius ab - a - b
    assert_eq!(s.genus(), 12);
    assert_eq!(s.frobenius(), 23);
    assert_eq!(s.apery_set(5).unwrap(), vec![0, 21, 7, 28, 14]);
    assert!(s.apery_set(6).is_err());
    assert_eq!(NumericalSemigroup::from_generators(&[1]).unwrap().frobenius(), -1);
}

proptest! {
    #[test]
    fn two_generator_formulas(a in 2u64..40, b in 2u64..40) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
        prop_assert_eq!(s.frobenius(), (a * b) as i64 - a as i64 - b as i64);
        prop_assert_eq!(s.genus() as u64, (a - 1) * (b - 1) / 2);
        // symmetric: x is a gap iff F - x is a member
        for x in 0..=s.frobenius() {
            prop_assert_eq!(s.membership(x), !s.membership(s.frobenius() - x));
        }
    }
}
