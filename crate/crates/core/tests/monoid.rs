use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use qfc_core::cone::facet_normals;
use qfc_core::decide::{fc_monoid, pfc_monoid, qfc_monoid, retract_monoid};
use qfc_core::lattice::ExponentVector;
use qfc_core::monoid::{FgMonoid, GapStatus, ZClass};

fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// Points reachable as nonnegative combinations with at most `depth` summands.
fn bounded_sums(gens: &[ExponentVector], depth: usize) -> BTreeSet<ExponentVector> {
    let mut all = BTreeSet::from([ExponentVector::zero(gens[0].len())]);
    let mut frontier = all.clone();
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for p in &frontier {
            for g in gens {
                let q = p + g;
                if all.insert(q.clone()) {
                    next.insert(q);
                }
            }
        }
        frontier = next;
    }
    all
}

#[test]
fn classification_in_one_variable() {
    let c = |g: &[i64]| FgMonoid::from_integers(g).unwrap().classify().unwrap();
    assert_eq!(c(&[4, 6]), ZClass::Nonnegative(2));
    assert_eq!(c(&[-3]), ZClass::Nonpositive(3));
    assert_eq!(c(&[2, -3]), ZClass::Group(1));
}

#[test]
fn cone_of_quadrant_and_half_plane() {
    let cone = facet_normals(&[ev(&[1, 0]), ev(&[0, 1]), ev(&[1, 1])]).unwrap();
    assert_eq!(cone.normals().len(), 2);
    assert!(cone.contains(&ev(&[3, 5])));
    assert!(!cone.contains(&ev(&[-1, 5])));
    let half = facet_normals(&[ev(&[1, 0]), ev(&[-1, 0]), ev(&[0, 1])]).unwrap();
    assert_eq!(half.normals().len(), 1);
    assert!(half.in_lineality_space(&ev(&[-7, 0])));
}

#[test]
fn membership_certificates_sum_correctly() {
    let m = FgMonoid::new(2, vec![ev(&[2, 0]), ev(&[0, 2]), ev(&[2, 3]), ev(&[3, 2]), ev(&[3, 3])]).unwrap();
    for (a, b) in [(5, 5), (4, 3), (8, 9)] {
        let p = ev(&[a, b]);
        let c = m.contains(&p).unwrap().expect("member");
        let mut sum = [BigInt::from(0), BigInt::from(0)];
        for (k, g) in c.iter().zip(m.generators()) {
            assert!(k >= &BigInt::from(0));
            sum[0] += k * g.entries()[0];
            sum[1] += k * g.entries()[1];
        }
        assert_eq!(sum, [BigInt::from(a), BigInt::from(b)]);
    }
    assert!(!m.is_member(&ev(&[1, 7])).unwrap());
}

#[test]
fn finite_gaps_in_one_variable() {
    let m = FgMonoid::from_integers(&[3, 5]).unwrap();
    let r = m.gap_set(&ev(&[0]), &ev(&[3]), 1000).unwrap();
    assert_eq!(r.status, GapStatus::FiniteExact);
    assert_eq!(r.elements, vec![ev(&[1]), ev(&[2]), ev(&[4]), ev(&[7])]);
    let n = FgMonoid::from_integers(&[1]).unwrap();
    assert_eq!(n.gap_set(&ev(&[0]), &ev(&[9]), 1000).unwrap().status, GapStatus::Empty);
}

#[test]
fn property_ladder_on_coordinate_monoids() {
    // N² and N × Z: qfc, pfc and normal, but not groups
    for gens in [
        vec![ev(&[1, 0]), ev(&[0, 1])],
        vec![ev(&[1, 0]), ev(&[0, 1]), ev(&[0, -1])],
    ] {
        let m = FgMonoid::new(2, gens).unwrap();
        assert!(qfc_monoid(&m).is_yes());
        assert!(pfc_monoid(&m).is_yes());
        assert!(retract_monoid(&m).is_no());
        assert!(m.is_normal().is_yes());
    }
    // retracts are exactly the summand groups
    let axis = FgMonoid::new(2, vec![ev(&[1, 0]), ev(&[-1, 0])]).unwrap();
    assert!(retract_monoid(&axis).is_yes());
    let even_axis = FgMonoid::new(2, vec![ev(&[2, 0]), ev(&[-2, 0])]).unwrap();
    assert!(retract_monoid(&even_axis).is_no());
    let z = FgMonoid::full(2).unwrap();
    assert!(fc_monoid(&z).is_yes());
    assert!(fc_monoid(&FgMonoid::from_integers(&[1]).unwrap()).is_no());
}

fn monoid_strategy() -> impl Strategy<Value = FgMonoid> {
    (1usize..=2, 1usize..=4).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), k)
            .prop_map(move |rows| FgMonoid::new(n, rows.into_iter().map(ExponentVector::new).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounded_sums_are_members(m in monoid_strategy()) {
        prop_assume!(!m.generators().is_empty());
        for p in bounded_sums(m.generators(), 3) {
            prop_assert!(m.is_member(&p).unwrap(), "{} should be in {}", p, m);
        }
    }

    #[test]
    fn members_lie_in_the_cone_and_group(m in monoid_strategy(), p in prop::collection::vec(-6i64..=6, 2)) {
        let p = ExponentVector::new(p[..m.ambient()].to_vec());
        if m.is_member(&p).unwrap() {
            prop_assert!(m.cone().contains(&p));
            prop_assert!(m.group().contains_vector(&p));
        }
    }

    #[test]
    fn retract_implies_pfc_implies_qfc(m in monoid_strategy()) {
        let q = qfc_monoid(&m);
        let p = pfc_monoid(&m);
        let r = retract_monoid(&m);
        if r.is_yes() { prop_assert!(!p.is_no()); }
        if p.is_yes() { prop_assert!(!q.is_no()); prop_assert!(!m.is_normal().is_no()); }
        if fc_monoid(&m).is_yes() { prop_assert!(m.is_group()); }
    }
}
