//! Independent re-checking of verdict documents.
//!
//! A verifier never trusts the decision procedures: every claim in a
//! certificate or witness is recomputed from lattice, monoid and polynomial
//! primitives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::k_subsets;
use crate::error::{Error, Result};
use crate::lattice::{group_of, ExponentVector, IntMatrix, LatticeSubgroup};
use crate::laurent::{self, CoefficientDomain, LaurentPoly};
use crate::monoid::FgMonoid;
use crate::rational::{self, Rational};
use crate::verdict::{
    field_size_assumption, Answer, Certificate, CoverCell, KeyLemmaWitness, Membership, MonomialGenerator, Obstruction,
    Shape, Verdict, Witness,
};

/// What a verdict is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Subject {
    Monoid {
        n: usize,
        generators: Vec<ExponentVector>,
    },
    Algebra {
        domain: CoefficientDomain,
        n: usize,
        generators: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Qfc,
    Pfc,
    Fc,
    Retract,
    Normal,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Qfc => "qfc",
            Property::Pfc => "pfc",
            Property::Fc => "fc",
            Property::Retract => "retract",
            Property::Normal => "normal",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "qfc" => Property::Qfc,
            "pfc" => Property::Pfc,
            "fc" => Property::Fc,
            "retract" => Property::Retract,
            "normal" => Property::Normal,
            _ => return Err(Error::Invalid(format!("unknown property {s:?}"))),
        })
    }
}

/// The machine-readable part of every decision output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub subject: Subject,
    pub property: Property,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub budgets: BTreeMap<String, u64>,
}

impl VerdictDocument {
    pub fn new(subject: Subject, property: Property, verdict: Verdict) -> Self {
        VerdictDocument {
            subject,
            property,
            verdict,
            elapsed_ms: None,
            budgets: BTreeMap::new(),
        }
    }
}

struct Context {
    n: usize,
    monoid: Option<FgMonoid>,
    /// For general subalgebras, the monoid generated by generator supports.
    support_monoid: Option<FgMonoid>,
    algebra: Option<(CoefficientDomain, Vec<LaurentPoly>)>,
}

fn malformed(e: Error) -> Error {
    match e {
        Error::MalformedCertificate(_) => e,
        e => Error::MalformedCertificate(e.to_string()),
    }
}

impl Context {
    fn new(subject: &Subject) -> Result<Self> {
        match subject {
            Subject::Monoid { n, generators } => Ok(Context {
                n: *n,
                monoid: Some(FgMonoid::new(*n, generators.clone()).map_err(malformed)?),
                support_monoid: None,
                algebra: None,
            }),
            Subject::Algebra { domain, n, generators } => {
                let gens: Vec<LaurentPoly> = generators
                    .iter()
                    .map(|g| laurent::parse(g, *domain, *n))
                    .collect::<Result<_>>()
                    .map_err(malformed)?;
                let exps: Option<Vec<ExponentVector>> = gens.iter().map(LaurentPoly::is_monic_monomial).collect();
                let monoid = match exps {
                    Some(e) => Some(FgMonoid::new(*n, e).map_err(malformed)?),
                    None => None,
                };
                let support: Vec<ExponentVector> = gens.iter().flat_map(LaurentPoly::supp).collect();
                Ok(Context {
                    n: *n,
                    monoid,
                    support_monoid: Some(FgMonoid::new(*n, support).map_err(malformed)?),
                    algebra: Some((*domain, gens)),
                })
            }
        }
    }

    /// `p ∈ M`, re-checking the membership the search returns.
    fn member(&self, p: &ExponentVector) -> Result<bool> {
        let Some(m) = &self.monoid else { return Ok(false) };
        if p.len() != self.n {
            return Ok(false);
        }
        match m.contains(p) {
            Ok(Some(c)) => Ok(combination_is(m.generators(), &c, p)),
            Ok(None) => Ok(false),
            Err(Error::Undecided(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `p ∉ M`, proven.
    fn non_member(&self, p: &ExponentVector) -> Result<bool> {
        let Some(m) = self.monoid.as_ref().or(self.support_monoid.as_ref()) else {
            return Ok(false);
        };
        if p.len() != self.n {
            return Ok(false);
        }
        match m.contains(p) {
            Ok(c) => Ok(c.is_none()),
            Err(Error::Undecided(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn group(&self) -> Option<&LatticeSubgroup> {
        self.monoid.as_ref().map(FgMonoid::group)
    }

    /// The monic monomial `x^e` lies in A.
    fn generator_ok(&self, g: &MonomialGenerator) -> Result<bool> {
        if g.exponent.len() != self.n {
            return Ok(false);
        }
        match (&g.expression, &self.algebra) {
            (Some(expr), Some((domain, gens))) => {
                let value = expr.evaluate(gens, *domain, self.n)?;
                Ok(value.is_monic_monomial().as_ref() == Some(&g.exponent))
            }
            _ => self.member(&g.exponent),
        }
    }

    /// Union of the generator supports of A.
    fn support(&self) -> BTreeSet<ExponentVector> {
        match (&self.algebra, &self.monoid) {
            (Some((_, gens)), _) => gens.iter().flat_map(LaurentPoly::supp).collect(),
            (None, Some(m)) => m.generators().iter().cloned().collect(),
            (None, None) => BTreeSet::new(),
        }
    }
}

/// `Σ cᵢ gᵢ = p` with every `cᵢ ≥ 0`.
fn combination_is(gens: &[ExponentVector], coeffs: &[BigInt], p: &ExponentVector) -> bool {
    if gens.len() != coeffs.len() || coeffs.iter().any(Signed::is_negative) {
        return false;
    }
    let mut acc = vec![BigInt::zero(); p.len()];
    for (g, c) in gens.iter().zip(coeffs) {
        if g.len() != p.len() {
            return false;
        }
        for (a, &x) in acc.iter_mut().zip(g.entries()) {
            *a += c * x;
        }
    }
    acc == p.to_big()
}

fn membership_ok(gens: &[ExponentVector], m: &Membership) -> bool {
    combination_is(gens, &m.coefficients, &m.point)
}

fn unimodular(rows: &[Vec<BigInt>], n: usize) -> Option<IntMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return None;
    }
    let m = IntMatrix::from_rows(rows.to_vec(), n).ok()?;
    m.is_unimodular().then_some(m)
}

fn row_vectors(c: &IntMatrix, range: std::ops::Range<usize>) -> Option<Vec<ExponentVector>> {
    range.map(|i| c.row_vector(i).ok()).collect()
}

/// Re-checks a document; `Ok(false)` when a claim fails, an error when the
/// document itself cannot be interpreted.
pub fn verify_certificate(doc: &VerdictDocument) -> Result<bool> {
    let ctx = Context::new(&doc.subject)?;
    let v = &doc.verdict;
    match v.answer {
        Answer::Yes => match &v.certificate {
            Some(c) if v.witness.is_none() => check_certificate(&ctx, doc.property, c),
            _ => Ok(false),
        },
        Answer::No => match &v.witness {
            Some(w) if v.certificate.is_none() => check_witness(&ctx, doc.property, w, &v.assumptions),
            _ => Ok(false),
        },
        Answer::Unknown => Ok(false),
    }
}

/// Parses and re-checks a JSON verdict document.
pub fn verify_document(json: &str) -> Result<bool> {
    let doc: VerdictDocument = serde_json::from_str(json).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    verify_certificate(&doc)
}

fn check_certificate(ctx: &Context, property: Property, cert: &Certificate) -> Result<bool> {
    use Property::*;
    match cert {
        Certificate::SummandBasis { basis, rank } => match property {
            Qfc => summand_basis_ok(ctx, basis, *rank),
            Fc => fc_ok(ctx, basis, *rank),
            Retract => Ok(summand_basis_ok(ctx, basis, *rank)? && group_ok(ctx)?),
            _ => Ok(false),
        },
        Certificate::GcdOne { exponents, combination } => {
            Ok(property == Qfc && gcd_one_ok(ctx, exponents, combination))
        }
        Certificate::KeyLemmaWitness(w) => Ok(property == Qfc && key_lemma_ok(ctx, w)?),
        Certificate::CoordinateMonoid { basis, free, units } => {
            Ok(matches!(property, Qfc | Pfc) && coordinate_ok(ctx, basis, *free, *units)?)
        }
        Certificate::NormalityCover { generators, cells } => {
            Ok(property == Normal && cover_ok(ctx, generators, cells)?)
        }
        Certificate::MonomialShape { shape, monomials } => Ok(property == Pfc && shape_ok(ctx, *shape, monomials)?),
        Certificate::UnitMonomials { monomials } => Ok(property == Fc && unit_monomials_ok(ctx, monomials)?),
    }
}

fn summand_basis_ok(ctx: &Context, basis: &[Vec<BigInt>], rank: usize) -> Result<bool> {
    let (Some(group), Some(c)) = (ctx.group(), unimodular(basis, ctx.n)) else {
        return Ok(false);
    };
    if rank > ctx.n {
        return Ok(false);
    }
    Ok(&LatticeSubgroup::from_matrix(&c.top_rows(rank)) == group)
}

/// Every generator is invertible in M.
fn group_ok(ctx: &Context) -> Result<bool> {
    let Some(m) = &ctx.monoid else { return Ok(false) };
    for g in m.generators() {
        if !ctx.member(&-g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fc_ok(ctx: &Context, basis: &[Vec<BigInt>], rank: usize) -> Result<bool> {
    if rank != ctx.n || !summand_basis_ok(ctx, basis, rank)? {
        return Ok(false);
    }
    for i in 0..ctx.n {
        let e = ExponentVector::unit(ctx.n, i);
        if !ctx.member(&e)? || !ctx.member(&-&e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gcd_one_ok(ctx: &Context, exponents: &[i64], combination: &[BigInt]) -> bool {
    let Some(m) = &ctx.monoid else { return false };
    if ctx.n != 1 || exponents.len() != combination.len() {
        return false;
    }
    let listed: BTreeSet<i64> = exponents.iter().copied().collect();
    let actual: BTreeSet<i64> = m.generators().iter().map(|g| g.entries()[0]).collect();
    if listed != actual {
        return false;
    }
    let sum: BigInt = exponents.iter().zip(combination).map(|(&e, c)| c * e).sum();
    sum.is_one()
}

/// `p` and `p + cᵢ` lie in M(A) for a unimodular C whose first `rank` rows
/// span a lattice containing all of M(A); then ⟨M(A)⟩ is that summand.
fn key_lemma_ok(ctx: &Context, w: &KeyLemmaWitness) -> Result<bool> {
    let n = ctx.n;
    let Some(c) = unimodular(&w.basis_change, n) else {
        return Ok(false);
    };
    if w.rank > n || w.memberships.len() != w.rank + 1 || w.anchor.len() != n {
        return Ok(false);
    }
    let Ok(cinv) = c.inverse_unimodular() else {
        return Ok(false);
    };
    if w.anchor.mul_matrix(&cinv).ok().as_ref() != Some(&w.anchor_image) {
        return Ok(false);
    }
    let Some(rows) = row_vectors(&c, 0..w.rank) else {
        return Ok(false);
    };
    let exps: Vec<ExponentVector> = w.generators.iter().map(|g| g.exponent.clone()).collect();
    for g in &w.generators {
        if !ctx.generator_ok(g)? {
            return Ok(false);
        }
    }
    let targets = std::iter::once(w.anchor.clone()).chain(rows.iter().map(|r| &w.anchor + r));
    for (t, m) in targets.zip(&w.memberships) {
        if m.point != t || !membership_ok(&exps, m) {
            return Ok(false);
        }
    }
    if w.rank == n {
        return Ok(true);
    }
    // M(A) must stay inside the span of the first rank rows; only checkable
    // when M(A) is known, i.e. for monoid algebras.
    let Some(m) = &ctx.monoid else { return Ok(false) };
    let h = if rows.is_empty() {
        LatticeSubgroup::zero(n)
    } else {
        group_of(&rows)?
    };
    Ok(m.generators().iter().all(|g| h.contains_vector(g)))
}

fn coordinate_ok(ctx: &Context, basis: &[Vec<BigInt>], free: usize, units: usize) -> Result<bool> {
    let n = ctx.n;
    let (Some(m), Some(c)) = (&ctx.monoid, unimodular(basis, n)) else {
        return Ok(false);
    };
    if free + units > n {
        return Ok(false);
    }
    let Some(b) = row_vectors(&c, 0..free + units) else {
        return Ok(false);
    };
    for (i, bi) in b.iter().enumerate() {
        if !ctx.member(bi)? || (i >= free && !ctx.member(&-bi)?) {
            return Ok(false);
        }
    }
    let cinv = c.inverse_unimodular()?;
    for g in m.generators() {
        let z = g.mul_matrix(&cinv)?;
        let ok = z.entries().iter().enumerate().all(|(i, &x)| {
            if i < free {
                x >= 0
            } else if i < free + units {
                true
            } else {
                x == 0
            }
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each independent generator subset S spanning ℝ(M) has a cell listing
/// exactly the `[⟨M⟩ : ℤS]` points of ⟨M⟩ in its half-open parallelepiped,
/// each with a membership.
fn cover_ok(ctx: &Context, generators: &[ExponentVector], cells: &[CoverCell]) -> Result<bool> {
    let Some(m) = &ctx.monoid else { return Ok(false) };
    if generators != m.generators() {
        return Ok(false);
    }
    let group = m.group();
    let r = group.rank();
    let coords: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| group.coordinates(&g.to_big()).expect("generator lies in its group"))
        .collect();
    let by_subset: BTreeMap<&[usize], &CoverCell> = cells.iter().map(|c| (c.subset.as_slice(), c)).collect();
    let subsets = if r == 0 {
        Vec::new()
    } else {
        k_subsets(generators.len(), r)
    };
    for subset in subsets {
        let t = IntMatrix::from_rows(subset.iter().map(|&i| coords[i].clone()).collect(), r)?;
        let det = t.det()?;
        if det.is_zero() {
            continue;
        }
        let Some(cell) = by_subset.get(subset.as_slice()) else {
            return Ok(false);
        };
        if BigInt::from(cell.points.len()) != det.abs() {
            return Ok(false);
        }
        let t_q: Vec<Vec<Rational>> = t.rows().iter().map(|row| rational::to_rational(row)).collect();
        let mut seen = BTreeSet::new();
        for p in &cell.points {
            if !seen.insert(p.point.clone()) || !membership_ok(generators, p) {
                return Ok(false);
            }
            let Some(x) = group.coordinates(&p.point.to_big()) else {
                return Ok(false);
            };
            let mu = rational::solve_combination(&t_q, &rational::to_rational(&x)).expect("full-rank system");
            if mu.iter().any(|q| q.is_negative() || q >= &Rational::one()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn shape_ok(ctx: &Context, shape: Shape, monomials: &[MonomialGenerator]) -> Result<bool> {
    if ctx.n != 1 || ctx.algebra.is_none() {
        return Ok(false);
    }
    for g in monomials {
        if !ctx.generator_ok(g)? {
            return Ok(false);
        }
    }
    let has = |e: i64| monomials.iter().any(|g| g.exponent.entries() == [e]);
    let support = ctx.support();
    Ok(match shape {
        Shape::Both => has(1) && has(-1),
        Shape::Positive => has(1) && support.iter().all(|e| e.entries()[0] >= 0),
        Shape::Negative => has(-1) && support.iter().all(|e| e.entries()[0] <= 0),
    })
}

fn unit_monomials_ok(ctx: &Context, monomials: &[MonomialGenerator]) -> Result<bool> {
    for g in monomials {
        if !ctx.generator_ok(g)? {
            return Ok(false);
        }
    }
    Ok((0..ctx.n).all(|i| {
        let e = ExponentVector::unit(ctx.n, i);
        let ne = -&e;
        monomials.iter().any(|g| g.exponent == e) && monomials.iter().any(|g| g.exponent == ne)
    }))
}

fn check_witness(ctx: &Context, property: Property, w: &Witness, assumptions: &[String]) -> Result<bool> {
    use Property::*;
    match w {
        Witness::TorsionElement { element, multiplier } => {
            if !matches!(property, Qfc | Pfc | Retract) || element.len() != ctx.n {
                return Ok(false);
            }
            let Some(group) = ctx.group() else { return Ok(false) };
            let scaled: Vec<BigInt> = element.iter().map(|x| x * multiplier).collect();
            Ok(multiplier > &BigInt::one() && !group.contains(element) && group.contains(&scaled))
        }
        Witness::NotNormalPoint {
            point,
            multiplier,
            membership,
        } => {
            let Some(m) = &ctx.monoid else { return Ok(false) };
            Ok(matches!(property, Normal | Pfc)
                && *multiplier >= 2
                && m.group().contains_vector(point)
                && membership.point == point.scale(*multiplier as i64)
                && membership_ok(m.generators(), membership)
                && ctx.non_member(point)?)
        }
        Witness::GcdTooBig { modulus } => {
            let Some((domain, _)) = &ctx.algebra else {
                return Ok(false);
            };
            let d = *modulus as i64;
            Ok(matches!(property, Qfc | Pfc)
                && ctx.n == 1
                && d >= 2
                && domain.has_field_of_size(*modulus)
                && assumptions.contains(&field_size_assumption(*modulus))
                && ctx.support().iter().all(|e| e.entries()[0] % d == 0))
        }
        Witness::UnitOutside { exponent } => {
            let is_unit_vector = exponent.l1_norm() == 1;
            Ok(property == Fc && is_unit_vector && ctx.non_member(exponent)?)
        }
        Witness::NonInvertible { element } => {
            Ok(property == Retract && ctx.member(element)? && ctx.non_member(&-element)?)
        }
        Witness::CounterexamplePair {
            f,
            g,
            product,
            obstruction,
        } => counterexample_ok(ctx, property, f, g, product, obstruction),
    }
}

/// `A ⊆ k + x²k[x]` (or the mirror image) and `f, g` are polynomials in x
/// (resp. x⁻¹) with nonzero constant terms, one of them with a linear term.
/// A shift `x^s` with `x^s f, x^{-s} g ∈ A` would need `s ≥ 0` and `s ≤ 0`,
/// and `s = 0` fails on the linear term.
fn counterexample_ok(
    ctx: &Context,
    property: Property,
    f: &str,
    g: &str,
    product: &crate::verdict::Expression,
    obstruction: &Obstruction,
) -> Result<bool> {
    let Some((domain, gens)) = &ctx.algebra else {
        return Ok(false);
    };
    if property != Property::Pfc || ctx.n != 1 {
        return Ok(false);
    }
    let Obstruction::MissingLinearMonomial { negative } = obstruction;
    let sign = if *negative { -1 } else { 1 };
    let f = laurent::parse(f, *domain, 1).map_err(malformed)?;
    let g = laurent::parse(g, *domain, 1).map_err(malformed)?;
    if f.is_zero() || g.is_zero() || product.evaluate(gens, *domain, 1)? != f.mul(&g)? {
        return Ok(false);
    }
    let allowed = |e: i64| e == 0 || e * sign >= 2;
    if !ctx.support().iter().all(|e| allowed(e.entries()[0])) {
        return Ok(false);
    }
    let zero = ExponentVector::zero(1);
    let linear = ExponentVector::new(vec![sign]);
    let factors_ok = [&f, &g]
        .iter()
        .all(|p| p.supp().contains(&zero) && p.supp().iter().all(|e| e.entries()[0] * sign >= 0));
    Ok(factors_ok && (f.supp().contains(&linear) || g.supp().contains(&linear)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::{self, SubalgebraSpec};

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn monoid_doc(gens: &[&[i64]], property: Property, verdict: Verdict) -> VerdictDocument {
        let n = gens[0].len();
        VerdictDocument::new(
            Subject::Monoid {
                n,
                generators: gens.iter().map(|g| ev(g)).collect(),
            },
            property,
            verdict,
        )
    }

    fn monoid(gens: &[&[i64]]) -> FgMonoid {
        FgMonoid::from_generators(gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    #[test]
    fn summand_basis_and_tampering() {
        let g: &[&[i64]] = &[&[1, 1], &[2, 2]];
        let v = decide::qfc_monoid(&monoid(g));
        let mut doc = monoid_doc(g, Property::Qfc, v);
        assert!(verify_certificate(&doc).unwrap());
        if let Some(Certificate::SummandBasis { basis, .. }) = &mut doc.verdict.certificate {
            basis[1][1] += 1;
        }
        assert!(!verify_certificate(&doc).unwrap());
    }

    #[test]
    fn round_trips_for_monoid_procedures() {
        let cases: &[&[&[i64]]] = &[
            &[&[3], &[5]],
            &[&[2]],
            &[&[2], &[3]],
            &[&[1, 1], &[-1, -1], &[0, 1]],
            &[&[1, 0], &[1, 1], &[1, 2]],
            &[&[2, 0], &[0, 2], &[2, 3], &[3, 2], &[3, 3]],
            &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        ];
        for g in cases {
            let m = monoid(g);
            for (p, v) in [
                (Property::Qfc, decide::qfc_monoid(&m)),
                (Property::Pfc, decide::pfc_monoid(&m)),
                (Property::Fc, decide::fc_monoid(&m)),
                (Property::Retract, decide::retract_monoid(&m)),
                (Property::Normal, m.is_normal()),
            ] {
                let decided = v.answer != Answer::Unknown;
                let doc = monoid_doc(g, p, v);
                assert_eq!(verify_certificate(&doc).unwrap(), decided, "{g:?} {p}");
            }
        }
    }

    #[test]
    fn wrong_property_is_rejected() {
        let g: &[&[i64]] = &[&[2]];
        let doc = monoid_doc(g, Property::Fc, decide::qfc_monoid(&monoid(g)));
        assert!(!verify_certificate(&doc).unwrap());
    }

    #[test]
    fn algebra_round_trips() {
        let q = CoefficientDomain::Rationals;
        for (text, n) in [
            ("x1 + x2; x1^2; x1^3", 2),
            ("x1^2", 1),
            ("x1^2; x1^3", 1),
            ("x1^2 + x1^3; x1^2", 1),
            ("x1 + x1^2; x1^2", 1),
            ("x1 + x1^-1; x1 - x1^-1", 1),
            ("x1 + x2; x2", 2),
        ] {
            let spec = SubalgebraSpec::parse(text, q, n).unwrap();
            let subject = Subject::Algebra {
                domain: q,
                n,
                generators: text.split(';').map(|s| s.trim().to_string()).collect(),
            };
            let v = decide::qfc_general(&spec).unwrap();
            assert!(
                verify_certificate(&VerdictDocument::new(subject.clone(), Property::Qfc, v)).unwrap(),
                "{text}"
            );
            let v = decide::fc_general(&spec).unwrap();
            let decided = v.answer != Answer::Unknown;
            let doc = VerdictDocument::new(subject.clone(), Property::Fc, v);
            assert_eq!(verify_certificate(&doc).unwrap(), decided, "{text}");
            if n == 1 {
                let v = decide::one_var_pfc_general(&spec).unwrap();
                assert!(
                    verify_certificate(&VerdictDocument::new(subject, Property::Pfc, v)).unwrap(),
                    "{text}"
                );
            }
        }
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(verify_document("{"), Err(Error::MalformedCertificate(_))));
        assert!(matches!(
            verify_document(r#"{"subject":{"type":"monoid","n":1,"generators":[[1]]},"property":"xx"}"#),
            Err(Error::MalformedCertificate(_))
        ));
    }
}
