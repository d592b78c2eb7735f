//! Decision procedures for fc, pfc, qfc and retracts.
//!
//! Monoid algebras R[M] are decided exactly through lattice invariants of M.
//! For general finitely generated subalgebras, monomials are discovered by
//! bounded linear algebra on products of generators, and the verdict follows
//! from the monoid they generate.

use std::collections::{BTreeMap, BTreeSet};

use log::debug;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cone::{interior_vector, DEFAULT_ENUMERATION_BUDGET};
use crate::error::{Error, Result};
use crate::lattice::{
    elementary_divisors, express_in_generators, extend_to_basis, group_of, is_direct_summand, saturation,
    torsion_witness, ExponentVector, IntMatrix, LatticeSubgroup,
};
use crate::laurent::{self, CoefficientDomain, LaurentPoly};
use crate::monoid::{FgMonoid, GapReport, GapStatus};
use crate::rational::Rational;
use crate::verdict::{
    field_size_assumption, Certificate, Expression, ExpressionTerm, KeyLemmaWitness, Membership, MonomialGenerator,
    Obstruction, Shape, Verdict, Witness,
};

pub const DEFAULT_WORD_LENGTH: usize = 4;
pub const DEFAULT_BASIS_CAP: usize = 5000;

const PFC_OPEN: &str = "no pfc criterion known for n >= 2 beyond the monomial cases";

/// Search budget for monomial discovery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    /// Longest product of generators considered.
    pub max_word_length: usize,
    /// Largest number of products spanning the search space.
    pub max_basis: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            max_word_length: DEFAULT_WORD_LENGTH,
            max_basis: DEFAULT_BASIS_CAP,
        }
    }
}

/// A subalgebra `A = R[f₁, …, f_k]` of the Laurent ring in `n` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct SubalgebraSpec {
    pub domain: CoefficientDomain,
    pub n: usize,
    pub generators: Vec<LaurentPoly>,
    pub effort: Effort,
}

impl SubalgebraSpec {
    pub fn new(domain: CoefficientDomain, n: usize, generators: Vec<LaurentPoly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput("generators"));
        }
        for g in &generators {
            if g.domain() != domain || g.nvars() != n {
                return Err(Error::DomainMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(SubalgebraSpec {
            domain,
            n,
            generators,
            effort: Effort::default(),
        })
    }

    /// Parses `"f1; f2; …"` in the polynomial text grammar.
    pub fn parse(text: &str, domain: CoefficientDomain, n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let g = laurent::parse(part, domain, n).map_err(|e| match e {
                Error::Syntax { pos, message } => Error::Syntax {
                    pos: pos + offset,
                    message,
                },
                e => e,
            })?;
            gens.push(g);
            offset += part.len() + 1;
        }
        Self::new(domain, n, gens)
    }

    pub fn with_effort(mut self, effort: Effort) -> Self {
        self.effort = effort;
        self
    }

    /// Exponents of the generators when every generator is a monic monomial.
    pub fn monomial_exponents(&self) -> Option<Vec<ExponentVector>> {
        self.generators.iter().map(LaurentPoly::is_monic_monomial).collect()
    }

    /// Union of generator supports.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.generators.iter().flat_map(|g| g.supp()).collect()
    }
}

/// A monic monomial `x^exponent` of A with an expression producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscoveredMonomial {
    pub exponent: ExponentVector,
    pub expression: Expression,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discovery {
    /// Sorted by exponent; always contains the exponent 0 (the constant 1).
    pub monomials: Vec<DiscoveredMonomial>,
    /// Set when the basis cap cut the search short of the word length.
    pub truncated: bool,
    /// Number of products spanning the searched space.
    pub words: usize,
    /// Longest product length fully searched.
    pub word_length: usize,
}

impl Discovery {
    pub fn exponents(&self) -> Vec<ExponentVector> {
        self.monomials.iter().map(|m| m.exponent.clone()).collect()
    }

    pub fn nonzero_exponents(&self) -> Vec<ExponentVector> {
        self.monomials
            .iter()
            .filter(|m| !m.exponent.is_zero())
            .map(|m| m.exponent.clone())
            .collect()
    }

    pub fn get(&self, e: &ExponentVector) -> Option<&DiscoveredMonomial> {
        self.monomials
            .binary_search_by(|m| m.exponent.cmp(e))
            .ok()
            .map(|i| &self.monomials[i])
    }

    fn summary(&self) -> String {
        format!(
            "searched {} products up to length {}{}; found {} nonzero monomial exponents",
            self.words,
            self.word_length,
            if self.truncated { " (basis cap reached)" } else { "" },
            self.nonzero_exponents().len()
        )
    }
}

fn require_field(domain: CoefficientDomain) -> Result<()> {
    if domain.is_field() {
        Ok(())
    } else {
        Err(Error::NotAField)
    }
}

/// A row of the reduced echelon form: a polynomial and the combination of
/// products producing it.
struct Row {
    poly: BTreeMap<ExponentVector, Rational>,
    combo: BTreeMap<usize, Rational>,
}

fn axpy<K: Ord + Clone>(
    domain: CoefficientDomain,
    target: &mut BTreeMap<K, Rational>,
    c: &Rational,
    src: &BTreeMap<K, Rational>,
) -> Result<()> {
    for (k, v) in src {
        let cur = target.remove(k).unwrap_or_else(Rational::zero);
        let next = domain.normalize(cur - c * v)?;
        if !next.is_zero() {
            target.insert(k.clone(), next);
        }
    }
    Ok(())
}

/// Monic monomials in the span of products of at most `L` generators.
///
/// Products are enumerated stratum by stratum (multisets of generator
/// indices of each length). Their span is kept in reduced row echelon form;
/// `x^e` lies in the span iff some reduced row is a single term.
pub fn discover_monomials(spec: &SubalgebraSpec) -> Result<Discovery> {
    require_field(spec.domain)?;
    let k = spec.generators.len();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut products: Vec<LaurentPoly> = vec![LaurentPoly::one(spec.domain, spec.n)];
    let mut stratum: Vec<usize> = vec![0];
    let mut truncated = false;
    let mut word_length = 0;
    for len in 1..=spec.effort.max_word_length {
        let next_words: Vec<(usize, usize)> = stratum
            .iter()
            .flat_map(|&parent| {
                let start = words[parent].last().copied().unwrap_or(0);
                (start..k).map(move |j| (parent, j))
            })
            .collect();
        if words.len() + next_words.len() > spec.effort.max_basis {
            truncated = true;
            break;
        }
        let next_products: Vec<LaurentPoly> = next_words
            .par_iter()
            .map(|&(parent, j)| products[parent].mul(&spec.generators[j]))
            .collect::<Result<_>>()?;
        stratum = (words.len()..words.len() + next_words.len()).collect();
        for ((parent, j), p) in next_words.into_iter().zip(next_products) {
            let mut w = words[parent].clone();
            w.push(j);
            words.push(w);
            products.push(p);
        }
        word_length = len;
    }
    debug!("monomial discovery over {} products", products.len());

    let domain = spec.domain;
    let mut rows: Vec<Row> = Vec::new();
    for (idx, p) in products.iter().enumerate() {
        let mut row = Row {
            poly: p.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
            combo: BTreeMap::from([(idx, Rational::one())]),
        };
        for r in &rows {
            let pivot = r.poly.keys().next().expect("nonzero row");
            if let Some(c) = row.poly.get(pivot).cloned() {
                axpy(domain, &mut row.poly, &c, &r.poly)?;
                axpy(domain, &mut row.combo, &c, &r.combo)?;
            }
        }
        let Some((pivot, lead)) = row.poly.iter().next().map(|(e, c)| (e.clone(), c.clone())) else {
            continue;
        };
        let inv = domain.inverse(&lead)?;
        for v in row.poly.values_mut().chain(row.combo.values_mut()) {
            *v = domain.normalize(&*v * &inv)?;
        }
        for r in rows.iter_mut() {
            if let Some(c) = r.poly.get(&pivot).cloned() {
                axpy(domain, &mut r.poly, &c, &row.poly)?;
                axpy(domain, &mut r.combo, &c, &row.combo)?;
            }
        }
        rows.push(row);
    }

    let mut monomials = Vec::new();
    for r in &rows {
        if r.poly.len() != 1 {
            continue;
        }
        let exponent = r.poly.keys().next().expect("one term").clone();
        let expression = Expression {
            terms: r
                .combo
                .iter()
                .map(|(&i, c)| ExpressionTerm {
                    coefficient: c.to_string(),
                    word: words[i].clone(),
                })
                .collect(),
        };
        // soundness: the expression must evaluate to exactly x^e
        let value = expression.evaluate(&spec.generators, domain, spec.n)?;
        if value.is_monic_monomial().as_ref() == Some(&exponent) {
            monomials.push(DiscoveredMonomial { exponent, expression });
        }
    }
    monomials.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    Ok(Discovery {
        monomials,
        truncated,
        words: products.len(),
        word_length,
    })
}

/// qfc for R[M]: yes iff ⟨M⟩ is a direct summand of ℤⁿ.
pub fn qfc_monoid(m: &FgMonoid) -> Verdict {
    let group = m.group();
    if is_direct_summand(group) {
        if m.ambient() == 1 && group.rank() == 1 {
            let exponents: Vec<i64> = m.generators().iter().map(|g| g.entries()[0]).collect();
            let combination = express_in_generators(m.generators(), &ExponentVector::new(vec![1]))
                .expect("lengths agree")
                .expect("gcd is one");
            return Verdict::yes(Certificate::GcdOne { exponents, combination });
        }
        let (c, r) = extend_to_basis(group).expect("summand");
        return Verdict::yes(Certificate::summand_basis(&c, r));
    }
    let (element, multiplier) = torsion_witness(group).expect("not a summand");
    Verdict::no(Witness::TorsionElement { element, multiplier })
}

/// Recognizes `M = ℕb₁ + … + ℕb_s + ℤb_{s+1} + … + ℤb_{s+t}` with the `bᵢ` part
/// of a basis of ℤⁿ.
fn coordinate_basis(m: &FgMonoid) -> Option<(IntMatrix, usize, usize)> {
    let n = m.ambient();
    let units = m.unit_group();
    if !is_direct_summand(units) || !is_direct_summand(m.group()) {
        return None;
    }
    let t = units.rank();
    let r = m.group().rank();
    let cone = m.cone();
    let s = r - t;
    if cone.normals().len() != s {
        return None;
    }
    // one ray generator per facet: tight on every other facet, smallest on its own
    let mut rays: Vec<ExponentVector> = Vec::new();
    for k in 0..s {
        let ray = m
            .generators()
            .iter()
            .filter_map(|g| {
                let ev = cone.evaluate(g);
                let tight = ev.iter().enumerate().all(|(j, x)| j == k || x.is_zero());
                (tight && ev[k].is_positive()).then(|| (ev[k].clone(), g.clone()))
            })
            .min()?;
        rays.push(ray.1);
    }
    let mut vecs = rays;
    vecs.extend((0..t).map(|i| units.basis().row_vector(i).expect("small entries")));
    if vecs.is_empty() {
        return Some((IntMatrix::identity(n), 0, 0));
    }
    let h = group_of(&vecs).ok()?;
    if h.rank() != r || !is_direct_summand(&h) || &h != m.group() {
        return None;
    }
    for g in m.generators() {
        let z = express_in_generators(&vecs, g).ok()??;
        if z[..s].iter().any(Signed::is_negative) {
            return None;
        }
    }
    let (c0, _) = extend_to_basis(&h).ok()?;
    let mut rows: Vec<Vec<BigInt>> = vecs.iter().map(ExponentVector::to_big).collect();
    rows.extend(c0.rows()[r..].iter().cloned());
    let c = IntMatrix::from_rows(rows, n).ok()?;
    c.is_unimodular().then_some((c, s, t))
}

/// pfc for R[M]. Necessary: M normal and qfc. Sufficient: M is a coordinate
/// monoid ℕˢ × ℤᵗ up to GL_n(ℤ). For n = 1 the two meet.
pub fn pfc_monoid(m: &FgMonoid) -> Verdict {
    pfc_monoid_with_budget(m, DEFAULT_ENUMERATION_BUDGET)
}

/// [`pfc_monoid`] with an explicit enumeration budget for the normality test.
pub fn pfc_monoid_with_budget(m: &FgMonoid, budget: u64) -> Verdict {
    let normal = m.normality_with_budget(budget);
    if normal.is_no() {
        return normal;
    }
    let qfc = qfc_monoid(m);
    if qfc.is_no() {
        return qfc;
    }
    if let Some((c, free, units)) = coordinate_basis(m) {
        return Verdict::yes(Certificate::CoordinateMonoid {
            basis: c.rows().to_vec(),
            free,
            units,
        });
    }
    if m.ambient() == 1 {
        // a normal submonoid of ℤ with gcd 1 is 0, ±ℕ or ℤ, all coordinate monoids
        return Verdict::unknown(format!("one-variable monoid {m} not recognized"));
    }
    if normal.answer == crate::verdict::Answer::Unknown {
        return Verdict::unknown(format!(
            "{PFC_OPEN}; normality undecided: {}",
            normal.reason.unwrap_or_default()
        ));
    }
    Verdict::unknown(PFC_OPEN)
}

/// fc for R[M] over a field: yes iff M = ℤⁿ.
pub fn fc_monoid(m: &FgMonoid) -> Verdict {
    let n = m.ambient();
    for i in 0..n {
        let e = ExponentVector::unit(n, i);
        for a in [e.clone(), -&e] {
            if !m.is_member(&a).unwrap_or(false) {
                return Verdict::no(Witness::UnitOutside { exponent: a });
            }
        }
    }
    Verdict::yes(Certificate::summand_basis(&IntMatrix::identity(n), n))
}

/// R[M] is a retract of B iff M is a group and a direct summand.
pub fn retract_monoid(m: &FgMonoid) -> Verdict {
    for g in m.generators() {
        if !m.is_member(&-g).unwrap_or(false) {
            return Verdict::no(Witness::NonInvertible { element: g.clone() }).with_reason("M is not a group");
        }
    }
    match qfc_monoid(m) {
        v if v.is_no() => v.with_reason("M is a group but not a direct summand"),
        _ => {
            let (c, r) = extend_to_basis(m.group()).expect("summand");
            Verdict::yes(Certificate::summand_basis(&c, r))
        }
    }
}

/// fc for a general subalgebra: `x·x⁻¹ = 1 ∈ A` forces A = B, so fc holds
/// iff every `x^{±eᵢ}` lies in A. Absence is proven through supports: every
/// element of A is supported in the monoid generated by generator supports.
pub fn fc_general(spec: &SubalgebraSpec) -> Result<Verdict> {
    require_field(spec.domain)?;
    if let Some(exps) = spec.monomial_exponents() {
        return Ok(fc_monoid(&FgMonoid::new(spec.n, exps)?));
    }
    let n = spec.n;
    let support = FgMonoid::new(n, spec.support().into_iter().collect())?;
    let units: Vec<ExponentVector> = (0..n)
        .flat_map(|i| {
            let e = ExponentVector::unit(n, i);
            [e.clone(), -&e]
        })
        .collect();
    for u in &units {
        if support.contains(u)?.is_none() {
            return Ok(Verdict::no(Witness::UnitOutside { exponent: u.clone() }));
        }
    }
    let disc = discover_monomials(spec)?;
    if units.iter().all(|u| disc.get(u).is_some()) {
        return Ok(Verdict::yes(Certificate::UnitMonomials {
            monomials: units.iter().map(|u| monomial_generator(&disc, u)).collect(),
        }));
    }
    Ok(Verdict::unknown(format!(
        "not every x^(+-e_i) found; {}",
        disc.summary()
    )))
}

fn monomial_generator(d: &Discovery, e: &ExponentVector) -> MonomialGenerator {
    MonomialGenerator {
        exponent: e.clone(),
        expression: d.get(e).map(|m| m.expression.clone()),
    }
}

/// A key-lemma anchor when the discovered exponents generate ℤⁿ: prefer
/// `w` with `w` and every `w + eᵢ` discovered (smallest ‖w‖₁, then
/// lexicographic); otherwise build `w = K·Σaⱼ` from integer expressions
/// `eᵢ = Σ zᵢⱼ aⱼ` with `K ≥ max |zᵢⱼ|`.
fn key_lemma_from_discovery(n: usize, d: &Discovery) -> Result<KeyLemmaWitness> {
    let found: BTreeSet<ExponentVector> = d.exponents().into_iter().collect();
    let mut candidates: Vec<&ExponentVector> = found
        .iter()
        .filter(|w| (0..n).all(|i| found.contains(&(*w + &ExponentVector::unit(n, i)))))
        .collect();
    candidates.sort_by_key(|w| (w.l1_norm(), (*w).clone()));
    let identity: Vec<Vec<BigInt>> = IntMatrix::identity(n).rows().to_vec();
    if let Some(w) = candidates.first() {
        let points: Vec<ExponentVector> = std::iter::once((*w).clone())
            .chain((0..n).map(|i| *w + &ExponentVector::unit(n, i)))
            .collect();
        let generators: Vec<MonomialGenerator> = points.iter().map(|p| monomial_generator(d, p)).collect();
        let memberships = points
            .iter()
            .enumerate()
            .map(|(i, p)| Membership {
                point: p.clone(),
                coefficients: (0..points.len()).map(|j| BigInt::from((i == j) as i64)).collect(),
            })
            .collect();
        return Ok(KeyLemmaWitness {
            basis_change: identity,
            rank: n,
            anchor: (*w).clone(),
            anchor_image: (*w).clone(),
            interior: None,
            multiplier: None,
            bounds: None,
            generators,
            memberships,
        });
    }
    let exps = d.nonzero_exponents();
    let mut z: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        z.push(express_in_generators(&exps, &ExponentVector::unit(n, i))?.ok_or(Error::NotSaturated)?);
    }
    let k = z.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero);
    let kk = vec![k.clone(); exps.len()];
    let to_point = |coeffs: &[BigInt]| -> Result<ExponentVector> {
        let mut acc = vec![BigInt::zero(); n];
        for (c, e) in coeffs.iter().zip(&exps) {
            for (a, &b) in acc.iter_mut().zip(e.entries()) {
                *a += c * b;
            }
        }
        ExponentVector::from_big(&acc)
    };
    let w = to_point(&kk)?;
    let mut memberships = vec![Membership {
        point: w.clone(),
        coefficients: kk.clone(),
    }];
    for zi in &z {
        let c: Vec<BigInt> = zi.iter().map(|x| x + &k).collect();
        memberships.push(Membership {
            point: to_point(&c)?,
            coefficients: c,
        });
    }
    Ok(KeyLemmaWitness {
        basis_change: identity,
        rank: n,
        anchor: w.clone(),
        anchor_image: w,
        interior: None,
        multiplier: Some(k),
        bounds: None,
        generators: exps.iter().map(|e| monomial_generator(d, e)).collect(),
        memberships,
    })
}

/// gcd of all generator support exponents (n = 1).
fn support_gcd(spec: &SubalgebraSpec) -> u64 {
    spec.support()
        .iter()
        .fold(0u64, |acc, e| acc.gcd(&e.entries()[0].unsigned_abs()))
}

/// Semi-decision of qfc for a general subalgebra.
pub fn qfc_general(spec: &SubalgebraSpec) -> Result<Verdict> {
    require_field(spec.domain)?;
    let n = spec.n;
    let disc = discover_monomials(spec)?;
    let exps = disc.nonzero_exponents();
    if !exps.is_empty() && group_of(&exps)?.is_full() {
        let w = key_lemma_from_discovery(n, &disc)?;
        return Ok(Verdict::yes(Certificate::KeyLemmaWitness(w)));
    }
    if n == 1 {
        let d = support_gcd(spec);
        if d >= 2 && !exps.is_empty() {
            if spec.domain.has_field_of_size(d) {
                return Ok(Verdict::no(Witness::GcdTooBig { modulus: d }).with_assumption(field_size_assumption(d)));
            }
            return Ok(Verdict::unknown(format!(
                "supports lie in {d}Z but the coefficient field has fewer than {d} elements"
            )));
        }
    }
    if let Some(exps) = spec.monomial_exponents() {
        return Ok(qfc_monoid(&FgMonoid::new(n, exps)?));
    }
    let group = if exps.is_empty() {
        LatticeSubgroup::zero(n)
    } else {
        group_of(&exps)?
    };
    Ok(Verdict::unknown(format!(
        "{}; they generate a rank-{} subgroup with elementary divisors {:?}",
        disc.summary(),
        group.rank(),
        elementary_divisors(&group)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    )))
}

/// Builds the key-lemma certificate from a finite gap set, following the
/// constructive proof: `N > max(N₁, N₂)` makes `N·w` and `N·w + cᵢ` land in
/// the cone beyond every gap.
pub fn qfc_from_finite_gap(m: &FgMonoid, gap: &GapReport) -> Result<Verdict> {
    if !matches!(gap.status, GapStatus::Empty | GapStatus::FiniteExact) {
        return Err(Error::StatusNotCertified(gap.status.to_string()));
    }
    let n = m.ambient();
    let h = if m.generators().is_empty() {
        LatticeSubgroup::zero(n)
    } else {
        saturation(m.group())
    };
    let (c, r) = extend_to_basis(&h)?;
    let cs: Vec<ExponentVector> = (0..r).map(|i| c.row_vector(i)).collect::<Result<_>>()?;
    let w = if m.generators().is_empty() {
        ExponentVector::zero(n)
    } else {
        interior_vector(m.generators())?
    };
    let cone = m.cone();
    let mut n1 = Rational::zero();
    for v in cone.normals() {
        let wv = Rational::from_integer(w.dot_big(v));
        for ci in &cs {
            n1 = n1.max(Rational::from_integer(ci.dot_big(v).abs()) / &wv);
        }
    }
    let mut n2 = 0i64;
    for g in &gap.elements {
        for ci in &cs {
            n2 = n2.max(g.l1_norm() + ci.l1_norm());
        }
    }
    let bound = n1.clone().max(Rational::from_integer(BigInt::from(n2)));
    let big_n: BigInt = bound.floor().to_integer() + 1;
    let nn = big_n.to_i64().ok_or(Error::Overflow("multiplier"))?;
    let anchor = w.scale(nn);
    let mut memberships = Vec::new();
    for p in std::iter::once(anchor.clone()).chain(cs.iter().map(|ci| &anchor + ci)) {
        let coefficients = m
            .contains(&p)?
            .ok_or_else(|| Error::Invalid(format!("gap report does not match the monoid: {p} is not a member")))?;
        memberships.push(Membership { point: p, coefficients });
    }
    let cinv = c.inverse_unimodular()?;
    let anchor_image = anchor.mul_matrix(&cinv)?;
    Ok(Verdict::yes(Certificate::KeyLemmaWitness(KeyLemmaWitness {
        basis_change: c.rows().to_vec(),
        rank: r,
        anchor,
        anchor_image,
        interior: Some(w),
        multiplier: Some(big_n),
        bounds: Some((n1.to_string(), n2.to_string())),
        generators: m
            .generators()
            .iter()
            .map(|g| MonomialGenerator {
                exponent: g.clone(),
                expression: None,
            })
            .collect(),
        memberships,
    })))
}

/// The counterexample `(x − 1)(1 + x + … + x^{a−1}) = x^a − 1` (mirrored for
/// negative exponents) for subalgebras inside `k + x^{±2}k[x^{±1}]`.
fn missing_linear_pair(spec: &SubalgebraSpec, disc: &Discovery, negative: bool) -> Result<Option<Witness>> {
    let sign = if negative { -1 } else { 1 };
    let Some(mono) = disc
        .monomials
        .iter()
        .filter(|m| m.exponent.entries()[0] * sign > 0)
        .min_by_key(|m| m.exponent.entries()[0].abs())
    else {
        return Ok(None);
    };
    let a = mono.exponent.entries()[0].abs();
    let x = |k: i64| format!("x1^{}", sign * k);
    let f = format!("{} - 1", x(1));
    let g = (0..a)
        .map(|k| if k == 0 { "1".to_string() } else { x(k) })
        .collect::<Vec<_>>()
        .join(" + ");
    let mut product = mono.expression.clone();
    product.terms.push(ExpressionTerm {
        coefficient: "-1".into(),
        word: Vec::new(),
    });
    // render through the parser so the strings are canonical
    let f = laurent::parse(&f, spec.domain, 1)?.render();
    let g = laurent::parse(&g, spec.domain, 1)?.render();
    Ok(Some(Witness::CounterexamplePair {
        f,
        g,
        product,
        obstruction: Obstruction::MissingLinearMonomial { negative },
    }))
}

/// pfc for a one-variable subalgebra with M(A) ≠ {0}: yes iff A is R[x],
/// R[x⁻¹] or R[x^{±1}].
pub fn one_var_pfc_general(spec: &SubalgebraSpec) -> Result<Verdict> {
    if spec.n != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: spec.n,
        });
    }
    require_field(spec.domain)?;
    if let Some(exps) = spec.monomial_exponents() {
        return Ok(pfc_monoid(&FgMonoid::new(1, exps)?));
    }
    let disc = discover_monomials(spec)?;
    if disc.nonzero_exponents().is_empty() {
        return Err(Error::HypothesisUnmet(format!(
            "no nonzero monomial found in A ({})",
            disc.summary()
        )));
    }
    let qfc = qfc_general(spec)?;
    if qfc.is_no() {
        return Ok(qfc);
    }
    let support = spec.support();
    let pos = support.iter().all(|e| e.entries()[0] >= 0);
    let neg = support.iter().all(|e| e.entries()[0] <= 0);
    let x = ExponentVector::new(vec![1]);
    let xinv = ExponentVector::new(vec![-1]);
    let has_x = disc.get(&x).is_some();
    let has_xinv = disc.get(&xinv).is_some();
    let shape = if has_x && has_xinv {
        Some(Shape::Both)
    } else if pos && has_x {
        Some(Shape::Positive)
    } else if neg && has_xinv {
        Some(Shape::Negative)
    } else {
        None
    };
    if let Some(shape) = shape {
        let monomials = [(&x, has_x), (&xinv, has_xinv)]
            .into_iter()
            .filter(|(_, found)| *found)
            .map(|(e, _)| monomial_generator(&disc, e))
            .collect();
        return Ok(Verdict::yes(Certificate::MonomialShape { shape, monomials }));
    }
    for (side_ok, negative) in [(pos, false), (neg, true)] {
        let linear = ExponentVector::new(vec![if negative { -1 } else { 1 }]);
        if side_ok && !support.contains(&linear) {
            if let Some(w) = missing_linear_pair(spec, &disc, negative)? {
                return Ok(Verdict::no(w));
            }
        }
    }
    Ok(Verdict::unknown(format!(
        "generators not recognized as R[x], R[x^-1] or R[x^+-1]; {}",
        disc.summary()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Answer;

    const Q: CoefficientDomain = CoefficientDomain::Rationals;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn ints(g: &[i64]) -> FgMonoid {
        FgMonoid::from_integers(g).unwrap()
    }

    fn mon(gens: &[&[i64]]) -> FgMonoid {
        FgMonoid::from_generators(gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn qfc_monoid_examples() {
        let v = qfc_monoid(&ints(&[2]));
        assert_eq!(
            v.witness,
            Some(Witness::TorsionElement {
                element: big(&[1]),
                multiplier: BigInt::from(2)
            })
        );
        assert!(matches!(
            qfc_monoid(&ints(&[3, 5])).certificate,
            Some(Certificate::GcdOne { .. })
        ));
        assert!(qfc_monoid(&mon(&[&[2, 0], &[0, 2], &[2, 3], &[3, 2], &[3, 3]])).is_yes());
        assert_eq!(
            qfc_monoid(&mon(&[&[2, 2]])).witness,
            Some(Witness::TorsionElement {
                element: big(&[1, 1]),
                multiplier: BigInt::from(2)
            })
        );
    }

    #[test]
    fn pfc_monoid_examples() {
        assert!(pfc_monoid(&ints(&[1])).is_yes());
        assert!(pfc_monoid(&ints(&[2])).is_no());
        assert!(matches!(
            pfc_monoid(&ints(&[2, 3])).witness,
            Some(Witness::NotNormalPoint { .. })
        ));
        let v = pfc_monoid(&mon(&[&[1, 1], &[-1, -1], &[0, 1]]));
        match v.certificate {
            Some(Certificate::CoordinateMonoid { basis, free, units }) => {
                assert_eq!((free, units), (1, 1));
                assert!(IntMatrix::from_rows(basis, 2).unwrap().is_unimodular());
            }
            c => panic!("unexpected {c:?}"),
        }
        assert_eq!(pfc_monoid(&mon(&[&[1, 0], &[1, 1], &[1, 2]])).answer, Answer::Unknown);
    }

    #[test]
    fn fc_and_retract_examples() {
        assert!(fc_monoid(&FgMonoid::full(2).unwrap()).is_yes());
        assert_eq!(
            fc_monoid(&ints(&[1])).witness,
            Some(Witness::UnitOutside { exponent: ev(&[-1]) })
        );
        assert!(fc_monoid(&ints(&[3, 5])).is_no());
        assert!(retract_monoid(&ints(&[1])).is_no());
        assert!(retract_monoid(&mon(&[&[1, 0], &[-1, 0]])).is_yes());
        assert!(matches!(
            retract_monoid(&ints(&[2, -2])).witness,
            Some(Witness::TorsionElement { .. })
        ));
    }

    #[test]
    fn fc_general_examples() {
        let v = fc_general(&SubalgebraSpec::parse("x1 + x2; x2", Q, 2).unwrap()).unwrap();
        assert_eq!(v.witness, Some(Witness::UnitOutside { exponent: ev(&[-1, 0]) }));
        let v = fc_general(&SubalgebraSpec::parse("x1 + x1^-1; x1 - x1^-1", Q, 1).unwrap()).unwrap();
        assert!(matches!(v.certificate, Some(Certificate::UnitMonomials { .. })));
    }

    #[test]
    fn discovery_finds_example_monomial() {
        let spec = SubalgebraSpec::parse("x1 + x2; x1^2; x1^3", Q, 2)
            .unwrap()
            .with_effort(Effort {
                max_word_length: 2,
                max_basis: DEFAULT_BASIS_CAP,
            });
        let d = discover_monomials(&spec).unwrap();
        let m = d.get(&ev(&[2, 1])).expect("x^2 y found");
        let mut terms: Vec<(String, Vec<usize>)> = m
            .expression
            .terms
            .iter()
            .map(|t| (t.coefficient.clone(), t.word.clone()))
            .collect();
        terms.sort();
        assert_eq!(terms, vec![("-1".to_string(), vec![2]), ("1".to_string(), vec![0, 1])]);
        assert!(qfc_general(&spec).unwrap().is_yes());
    }

    #[test]
    fn discovery_never_finds_odd_exponents_in_even_algebra() {
        let spec = SubalgebraSpec::parse("x1^2", Q, 1).unwrap();
        let d = discover_monomials(&spec).unwrap();
        assert_eq!(d.exponents(), vec![ev(&[0]), ev(&[2]), ev(&[4]), ev(&[6]), ev(&[8])]);
    }

    #[test]
    fn qfc_general_examples() {
        let v = qfc_general(&SubalgebraSpec::parse("x1^2", Q, 1).unwrap()).unwrap();
        assert_eq!(v.witness, Some(Witness::GcdTooBig { modulus: 2 }));
        assert_eq!(v.assumptions, vec![field_size_assumption(2)]);
        let v = qfc_general(&SubalgebraSpec::parse("x1^2; x1^3", Q, 1).unwrap()).unwrap();
        match v.certificate {
            Some(Certificate::KeyLemmaWitness(w)) => assert_eq!(w.anchor, ev(&[2])),
            c => panic!("unexpected {c:?}"),
        }
        let f2 = CoefficientDomain::PrimeField(2);
        let v = qfc_general(&SubalgebraSpec::parse("x1^3 + x1^6", f2, 1).unwrap()).unwrap();
        assert_eq!(v.answer, Answer::Unknown);
    }

    #[test]
    fn fin_gap_certificate_for_three_five() {
        let m = ints(&[3, 5]);
        let gap = m.gap_set(&ev(&[0]), &ev(&[20]), 1000).unwrap();
        let v = qfc_from_finite_gap(&m, &gap).unwrap();
        match v.certificate {
            Some(Certificate::KeyLemmaWitness(w)) => {
                assert_eq!(w.multiplier, Some(BigInt::from(9)));
                assert_eq!(w.bounds, Some(("1/3".into(), "8".into())));
                assert_eq!(w.anchor, ev(&[27]));
                assert_eq!(w.memberships[1].point, ev(&[28]));
            }
            c => panic!("unexpected {c:?}"),
        }
        let full = FgMonoid::full(2).unwrap();
        let gap = full.gap_set(&ev(&[-1, -1]), &ev(&[1, 1]), 100).unwrap();
        assert!(qfc_from_finite_gap(&full, &gap).unwrap().is_yes());
        let two = ints(&[2]);
        let mut gap = two.gap_set(&ev(&[0]), &ev(&[10]), 100).unwrap();
        gap.status = GapStatus::Unknown;
        assert!(matches!(
            qfc_from_finite_gap(&two, &gap),
            Err(Error::StatusNotCertified(_))
        ));
    }

    #[test]
    fn one_variable_pfc() {
        let p = |s: &str| one_var_pfc_general(&SubalgebraSpec::parse(s, Q, 1).unwrap());
        assert!(p("x1").unwrap().is_yes());
        assert!(p("x1^2; x1^3").unwrap().is_no());
        assert!(p("x1; x1^-1").unwrap().is_yes());
        assert!(p("x1 + x1^2; x1^2").unwrap().is_yes());
        let v = p("x1^2 + x1^3; x1^2").unwrap();
        assert!(matches!(v.witness, Some(Witness::CounterexamplePair { .. })));
        assert!(matches!(p("x1^2 + x1^3"), Err(Error::HypothesisUnmet(_))));
    }
}
