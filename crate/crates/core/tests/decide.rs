use qfc_core::decide::{discover_monomials, fc_general, one_var_pfc_general, qfc_general, Effort, SubalgebraSpec};
use qfc_core::lattice::ExponentVector;
use qfc_core::laurent::CoefficientDomain;
use qfc_core::verdict::{Certificate, Witness};
use qfc_core::verify::{verify_certificate, Property, Subject, VerdictDocument};
use qfc_core::Error;

const Q: CoefficientDomain = CoefficientDomain::Rationals;

fn spec(text: &str, domain: CoefficientDomain, n: usize) -> SubalgebraSpec {
    SubalgebraSpec::parse(text, domain, n).unwrap()
}

fn check(text: &str, domain: CoefficientDomain, n: usize, property: Property, v: qfc_core::verdict::Verdict) -> bool {
    let doc = VerdictDocument::new(
        Subject::Algebra {
            domain,
            n,
            generators: text.split(';').map(|s| s.trim().to_string()).collect(),
        },
        property,
        v,
    );
    verify_certificate(&doc).unwrap()
}

#[test]
fn every_discovered_monomial_evaluates_to_itself() {
    for (text, n) in [
        ("x1 + x2; x1^2; x1^3", 2),
        ("x1 + x1^2; x1^2", 1),
        ("x1*x2 + x1; x2^-1", 2),
    ] {
        let s = spec(text, Q, n);
        let d = discover_monomials(&s).unwrap();
        for m in &d.monomials {
            let value = m.expression.evaluate(&s.generators, Q, n).unwrap();
            assert_eq!(value.is_monic_monomial(), Some(m.exponent.clone()), "{text}");
        }
    }
}

#[test]
fn word_length_limits_discovery() {
    let short = spec("x1 + x2; x1^2; x1^3", Q, 2).with_effort(Effort {
        max_word_length: 1,
        ..Effort::default()
    });
    assert!(discover_monomials(&short)
        .unwrap()
        .get(&ExponentVector::from([2, 1]))
        .is_none());
}

#[test]
fn qfc_verdicts_carry_checkable_evidence() {
    let text = "x1 + x2; x1^2; x1^3";
    let v = qfc_general(&spec(text, Q, 2)).unwrap();
    assert!(matches!(v.certificate, Some(Certificate::KeyLemmaWitness(_))));
    assert!(check(text, Q, 2, Property::Qfc, v));

    let f5 = CoefficientDomain::PrimeField(5);
    let v = qfc_general(&spec("x1^2 + x1^4; x1^-2", f5, 1)).unwrap();
    assert_eq!(v.witness, Some(Witness::GcdTooBig { modulus: 2 }));
    assert!(!v.assumptions.is_empty());
    assert!(check("x1^2 + x1^4; x1^-2", f5, 1, Property::Qfc, v));

    // F2 is too small for the root-of-unity argument with d = 3
    let f2 = CoefficientDomain::PrimeField(2);
    assert!(!qfc_general(&spec("x1^3", f2, 1)).unwrap().is_no());
}

#[test]
fn fc_holds_only_for_the_whole_ring() {
    let text = "x1; x1^-1 + x1";
    let v = fc_general(&spec(text, Q, 1)).unwrap();
    assert!(v.is_yes());
    assert!(check(text, Q, 1, Property::Fc, v));
    let v = fc_general(&spec("x1 + x2; x2", Q, 2)).unwrap();
    assert!(matches!(v.witness, Some(Witness::UnitOutside { .. })));
}

#[test]
fn one_variable_pfc_needs_a_monomial() {
    assert!(one_var_pfc_general(&spec("x1^-1; x1^-1 + x1^-3", Q, 1))
        .unwrap()
        .is_yes());
    assert!(matches!(
        one_var_pfc_general(&spec("x1 + x1^2", Q, 1)),
        Err(Error::HypothesisUnmet(_))
    ));
    assert!(matches!(
        one_var_pfc_general(&spec("x1 + x2", Q, 2)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn integers_are_rejected() {
    let z = CoefficientDomain::Integers;
    assert!(matches!(qfc_general(&spec("x1", z, 1)), Err(Error::NotAField)));
}
