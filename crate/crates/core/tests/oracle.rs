use qfc_core::decide::{pfc_monoid, qfc_monoid};
use qfc_core::lattice::ExponentVector;
use qfc_core::laurent::{parse, CoefficientDomain};
use qfc_core::monoid::FgMonoid;
use qfc_core::oracle::{
    agreement_check, fuzz_monoid_algebra, recheck_counterexample, strong_qfc_witness_f2, verify_strong_witness,
    FuzzConfig, ObstructionKind,
};
use qfc_core::verify::Property;
use qfc_core::Error;

fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

#[test]
fn counterexamples_survive_an_independent_recheck() {
    let m = FgMonoid::from_integers(&[2, 3]).unwrap();
    assert!(pfc_monoid(&m).is_no());
    let cfg = FuzzConfig::new(2, ev(&[-2]), ev(&[5]), Property::Pfc);
    let r = fuzz_monoid_algebra(&m, &cfg).unwrap();
    assert!(r.counterexample_count > 0);
    for cx in &r.counterexamples {
        assert_eq!(cx.obstruction, ObstructionKind::ExactNoShift);
        assert!(recheck_counterexample(&m, &cfg, cx).unwrap());
    }
}

#[test]
fn odd_prime_agrees_with_verdicts() {
    for gens in [&[2i64][..], &[3, 5], &[1, -1]] {
        let m = FgMonoid::from_integers(gens).unwrap();
        let cfg = FuzzConfig::new(3, ev(&[-2]), ev(&[3]), Property::Qfc);
        assert!(agreement_check(&m, &cfg), "{gens:?}");
        let r = fuzz_monoid_algebra(&m, &cfg).unwrap();
        assert_eq!(r.counterexample_count == 0, qfc_monoid(&m).is_yes(), "{gens:?}");
    }
}

#[test]
fn two_variable_runs_are_bounded_evidence() {
    let m = FgMonoid::new(2, vec![ev(&[2, 0]), ev(&[0, 1])]).unwrap();
    let cfg = FuzzConfig::new(2, ev(&[0, 0]), ev(&[2, 1]), Property::Qfc);
    let r = fuzz_monoid_algebra(&m, &cfg).unwrap();
    assert_eq!(r.regime, ObstructionKind::NoShiftWithinRadius);
    assert!(r.counterexample_count > 0);
}

#[test]
fn configuration_limits() {
    let m = FgMonoid::from_integers(&[2]).unwrap();
    let bad_prime = FuzzConfig::new(4, ev(&[0]), ev(&[3]), Property::Qfc);
    assert!(fuzz_monoid_algebra(&m, &bad_prime).is_err());
    let wide = FuzzConfig::new(2, ev(&[0]), ev(&[60]), Property::Qfc);
    assert!(matches!(fuzz_monoid_algebra(&m, &wide), Err(Error::BudgetExceeded(_))));
}

#[test]
fn strong_witnesses_over_f2() {
    let f2 = CoefficientDomain::PrimeField(2);
    for text in ["x1^-3 + x1^2", "x1 + x1^2 + x1^3", "1", "x1^5"] {
        let f = parse(text, f2, 1).unwrap();
        let w = strong_qfc_witness_f2(&f).unwrap();
        assert!(verify_strong_witness(&f, &w).unwrap(), "{text}");
    }
    let q = parse("x1", CoefficientDomain::Rationals, 1).unwrap();
    assert!(strong_qfc_witness_f2(&q).is_err());
}
