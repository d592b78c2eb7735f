use proptest::prelude::*;

use qfc_core::lattice::ExponentVector;
use qfc_core::laurent::{parse, CoefficientDomain, LaurentPoly};

const Q: CoefficientDomain = CoefficientDomain::Rationals;

#[test]
fn parse_and_render() {
    let f = parse("3/2*x1^2*x2^-1 - x1 + 4", Q, 2).unwrap();
    assert_eq!(f.num_terms(), 3);
    assert_eq!(f.deg(1).unwrap(), 2);
    assert_eq!(f.ord(2).unwrap(), -1);
    assert_eq!(parse(&f.render(), Q, 2).unwrap(), f);
    assert!(parse("x3", Q, 2).is_err());
    assert!(parse("x1 +", Q, 1).is_err());
}

#[test]
fn prime_field_arithmetic_reduces() {
    let f3 = CoefficientDomain::PrimeField(3);
    let f = parse("1 + x1", f3, 1).unwrap();
    assert_eq!(f.pow(3).unwrap(), parse("1 + x1^3", f3, 1).unwrap());
    assert!(f.sub(&f).unwrap().is_zero());
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 0..5).prop_map(|terms| {
        let mut f = LaurentPoly::zero(Q, 2);
        for (a, b, c) in terms {
            let t = LaurentPoly::monomial(Q, ExponentVector::from([a, b]), num_bigint::BigInt::from(c).into()).unwrap();
            f = f.add(&t).unwrap();
        }
        f
    })
}

proptest! {
    #[test]
    fn ring_laws(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(parse(&f.render(), Q, 2).unwrap(), f.clone());
        if !f.is_zero() && !g.is_zero() {
            let p = f.mul(&g).unwrap();
            prop_assert_eq!(p.deg(1).unwrap(), f.deg(1).unwrap() + g.deg(1).unwrap());
            prop_assert_eq!(p.ord(2).unwrap(), f.ord(2).unwrap() + g.ord(2).unwrap());
        }
    }
}
