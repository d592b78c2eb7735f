//! Finitely generated submonoids of ℤⁿ: membership, units, normality, gaps.
//!
//! Membership splits off the unit group. The generators lying in the
//! lineality space of the cone generate the unit group U; every other
//! generator has positive weight against the sum of the facet normals, so a
//! depth-first search over those generators terminates, and a residual that
//! reaches weight zero is tested for membership in U.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{
    box_points, box_volume, facet_normals_in, k_subsets, ConeHRep, DEFAULT_ENUMERATION_BUDGET, MAX_DIMENSION,
};
use crate::error::{Error, Result};
use crate::lattice::{
    check_lengths, express_in_generators, group_of, hnf, is_direct_summand, ExponentVector, IntMatrix, LatticeSubgroup,
};
use crate::numsgp::NumericalSemigroup;
use crate::rational::{self, Rational};
use crate::verdict::{Certificate, CoverCell, Membership, Verdict, Witness};

/// Points sampled on a witness line before reporting infinite-gap evidence.
pub const WITNESS_SAMPLES: usize = 16;

/// How many of the smallest gaps are tried as witness-line base points.
const WITNESS_BASES: usize = 64;

/// Classification of a submonoid of ℤ by sign pattern and gcd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "d", rename_all = "snake_case")]
pub enum ZClass {
    Zero,
    /// All generators nonnegative with gcd d: M ⊆ dℕ with finite complement.
    Nonnegative(u64),
    /// All generators nonpositive with gcd d.
    Nonpositive(u64),
    /// Generators of both signs: M = dℤ.
    Group(u64),
}

impl fmt::Display for ZClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZClass::Zero => f.write_str("0"),
            ZClass::Nonnegative(d) => write!(f, "{d}N"),
            ZClass::Nonpositive(d) => write!(f, "-{d}N"),
            ZClass::Group(d) => write!(f, "{d}Z"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapStatus {
    Empty,
    FiniteExact,
    FiniteWithinBox,
    InfiniteEvidence,
    Unknown,
}

impl fmt::Display for GapStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `base + k·direction` lies in the cone and outside M for `0 ≤ k < samples`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLine {
    pub base: ExponentVector,
    pub direction: ExponentVector,
    pub samples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub status: GapStatus,
    pub elements: Vec<ExponentVector>,
    pub lo: ExponentVector,
    pub hi: ExponentVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<WitnessLine>,
}

#[derive(Clone, Debug)]
struct Lineality {
    /// Indices of generators in the lineality space.
    gens: Vec<usize>,
    /// Indices of the remaining generators.
    pointed: Vec<usize>,
    group: LatticeSubgroup,
    /// Strictly positive integer relation `Σ relation[k]·g_{gens[k]} = 0`.
    relation: Vec<BigInt>,
}

#[derive(Clone, Debug)]
struct SearchData {
    normals: Vec<Vec<i128>>,
    /// Facet evaluations of each pointed generator.
    evals: Vec<Vec<i128>>,
}

#[derive(Clone, Debug)]
pub struct FgMonoid {
    n: usize,
    generators: Vec<ExponentVector>,
    group: OnceLock<LatticeSubgroup>,
    cone: OnceLock<ConeHRep>,
    lineality: OnceLock<Lineality>,
    search: OnceLock<Option<SearchData>>,
    semigroup: OnceLock<Option<NumericalSemigroup>>,
}

impl PartialEq for FgMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators
    }
}

impl Eq for FgMonoid {}

impl fmt::Display for FgMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.n == 1 {
            self.generators.iter().map(|g| g.entries()[0].to_string()).collect()
        } else {
            self.generators.iter().map(ToString::to_string).collect()
        };
        write!(f, "<{}>", parts.join(if self.n == 1 { "," } else { ";" }))
    }
}

fn l1_lex(v: &ExponentVector) -> (i64, ExponentVector) {
    (v.l1_norm(), v.clone())
}

impl FgMonoid {
    pub fn new(n: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("ambient rank must be at least 1".into()));
        }
        if n > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(n));
        }
        check_lengths(&generators, n)?;
        let mut gens: Vec<ExponentVector> = Vec::new();
        for g in generators {
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(FgMonoid {
            n,
            generators: gens,
            group: OnceLock::new(),
            cone: OnceLock::new(),
            lineality: OnceLock::new(),
            search: OnceLock::new(),
            semigroup: OnceLock::new(),
        })
    }

    pub fn from_generators(generators: Vec<ExponentVector>) -> Result<Self> {
        let n = generators.first().ok_or(Error::EmptyInput("generators"))?.len();
        Self::new(n, generators)
    }

    /// Submonoid of ℤ generated by the given integers.
    pub fn from_integers(gens: &[i64]) -> Result<Self> {
        Self::new(1, gens.iter().map(|&a| ExponentVector::new(vec![a])).collect())
    }

    /// ℤⁿ, generated by ±eᵢ.
    pub fn full(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 0..n {
            let e = ExponentVector::unit(n, i);
            gens.push(-&e);
            gens.push(e);
        }
        Self::new(n, gens)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Deduplicated nonzero generators.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// ⟨M⟩.
    pub fn group(&self) -> &LatticeSubgroup {
        self.group.get_or_init(|| {
            if self.generators.is_empty() {
                LatticeSubgroup::zero(self.n)
            } else {
                group_of(&self.generators).expect("lengths checked")
            }
        })
    }

    pub fn cone(&self) -> &ConeHRep {
        self.cone
            .get_or_init(|| facet_normals_in(self.n, &self.generators).expect("dimension checked"))
    }

    fn lineality(&self) -> &Lineality {
        self.lineality.get_or_init(|| {
            let cone = self.cone();
            let (gens, pointed): (Vec<usize>, Vec<usize>) =
                (0..self.generators.len()).partition(|&i| cone.in_lineality_space(&self.generators[i]));
            let vecs: Vec<ExponentVector> = gens.iter().map(|&i| self.generators[i].clone()).collect();
            let group = if vecs.is_empty() {
                LatticeSubgroup::zero(self.n)
            } else {
                group_of(&vecs).expect("lengths checked")
            };
            Lineality {
                relation: positive_relation(&vecs),
                gens,
                pointed,
                group,
            }
        })
    }

    fn search_data(&self) -> Result<&SearchData> {
        self.search
            .get_or_init(|| {
                let normals: Option<Vec<Vec<i128>>> = self
                    .cone()
                    .normals()
                    .iter()
                    .map(|v| v.iter().map(ToPrimitive::to_i128).collect())
                    .collect();
                let normals = normals?;
                let evals = self
                    .lineality()
                    .pointed
                    .iter()
                    .map(|&i| evaluate(&normals, self.generators[i].entries()))
                    .collect();
                Some(SearchData { normals, evals })
            })
            .as_ref()
            .ok_or(Error::Overflow("facet normals"))
    }

    /// M ∩ (−M), generated by the generators in the lineality space.
    pub fn unit_group(&self) -> &LatticeSubgroup {
        &self.lineality().group
    }

    pub fn is_group(&self) -> bool {
        self.lineality().pointed.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.unit_group().rank() == 0
    }

    /// Sign pattern and gcd of a submonoid of ℤ.
    pub fn classify(&self) -> Result<ZClass> {
        if self.n != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: self.n,
            });
        }
        let vals: Vec<i64> = self.generators.iter().map(|g| g.entries()[0]).collect();
        if vals.is_empty() {
            return Ok(ZClass::Zero);
        }
        let d = vals.iter().fold(0u64, |acc, &a| acc.gcd(&a.unsigned_abs()));
        let pos = vals.iter().any(|&a| a > 0);
        let neg = vals.iter().any(|&a| a < 0);
        Ok(match (pos, neg) {
            (true, true) => ZClass::Group(d),
            (true, false) => ZClass::Nonnegative(d),
            _ => ZClass::Nonpositive(d),
        })
    }

    /// For n = 1 with one-signed generators, the numerical semigroup
    /// `{a/d : a ∈ ±M}` together with the sign.
    fn scaled_semigroup(&self) -> Result<Option<(&NumericalSemigroup, u64, i64)>> {
        if self.n != 1 {
            return Ok(None);
        }
        let (d, sign) = match self.classify()? {
            ZClass::Nonnegative(d) => (d, 1),
            ZClass::Nonpositive(d) => (d, -1),
            _ => return Ok(None),
        };
        let s = self.semigroup.get_or_init(|| {
            let gens: Vec<u64> = self
                .generators
                .iter()
                .map(|g| g.entries()[0].unsigned_abs() / d)
                .collect();
            NumericalSemigroup::from_generators(&gens).ok()
        });
        match s {
            Some(s) => Ok(Some((s, d, sign))),
            None => Err(Error::Overflow("numerical semigroup table")),
        }
    }

    /// Nonnegative coefficients `c` with `Σ cᵢ·generatorsᵢ = a`, or `None`
    /// when `a ∉ M`.
    pub fn contains(&self, a: &ExponentVector) -> Result<Option<Vec<BigInt>>> {
        self.contains_with_budget(a, DEFAULT_ENUMERATION_BUDGET)
    }

    pub fn is_member(&self, a: &ExponentVector) -> Result<bool> {
        Ok(self.contains(a)?.is_some())
    }

    pub fn contains_with_budget(&self, a: &ExponentVector, budget: u64) -> Result<Option<Vec<BigInt>>> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        let k = self.generators.len();
        if a.is_zero() {
            return Ok(Some(vec![BigInt::zero(); k]));
        }
        if !self.group().contains_vector(a) || !self.cone().contains(a) {
            return Ok(None);
        }
        if let Some((s, d, sign)) = self.scaled_semigroup()? {
            return Ok(self.semigroup_certificate(s, d, sign, a.entries()[0]));
        }
        let lin = self.lineality();
        let Some((counts, residual)) = self.pointed_search(a, budget)? else {
            return Ok(None);
        };
        let mut coeffs = vec![BigInt::zero(); k];
        for (slot, &i) in counts.iter().zip(&lin.pointed) {
            coeffs[i] = BigInt::from(*slot);
        }
        if !residual.is_zero() {
            let vecs: Vec<ExponentVector> = lin.gens.iter().map(|&i| self.generators[i].clone()).collect();
            let z = express_in_generators(&vecs, &residual)?.expect("residual lies in the unit group");
            // shift by a multiple of the positive relation until all coefficients are ≥ 0
            let mut t = BigInt::zero();
            for (zi, ri) in z.iter().zip(&lin.relation) {
                if zi.is_negative() {
                    t = t.max(Integer::div_ceil(&-zi, ri));
                }
            }
            for ((zi, ri), &i) in z.iter().zip(&lin.relation).zip(&lin.gens) {
                coeffs[i] = zi + &t * ri;
            }
        }
        Ok(Some(coeffs))
    }

    fn semigroup_certificate(&self, s: &NumericalSemigroup, d: u64, sign: i64, a: i64) -> Option<Vec<BigInt>> {
        let t = (a * sign) as u64 / d;
        if !s.membership(t as i64) {
            return None;
        }
        let index_of = |v: u64| {
            self.generators
                .iter()
                .position(|g| g.entries()[0] == sign * (v * d) as i64)
                .expect("scaled generator")
        };
        let m = s.generators()[0];
        let w = s.apery_set(m).expect("generator is an element")[(t % m) as usize];
        let mut coeffs = vec![BigInt::zero(); self.generators.len()];
        coeffs[index_of(m)] += BigInt::from((t - w) / m);
        let mut x = w;
        while x > 0 {
            let g = *s
                .generators()
                .iter()
                .find(|&&g| g <= x && s.membership((x - g) as i64))
                .expect("element has a predecessor");
            coeffs[index_of(g)] += 1;
            x -= g;
        }
        Some(coeffs)
    }

    /// Depth-first search over the pointed generators in nondecreasing
    /// index order. Returns the generator counts and the leftover unit part.
    fn pointed_search(&self, a: &ExponentVector, budget: u64) -> Result<Option<(Vec<u64>, ExponentVector)>> {
        let lin = self.lineality();
        let data = self.search_data()?;
        let units = &lin.group;
        let gens: Vec<&ExponentVector> = lin.pointed.iter().map(|&i| &self.generators[i]).collect();

        struct Frame {
            residual: ExponentVector,
            eval: Vec<i128>,
            start: usize,
            next: usize,
            chosen: Option<usize>,
        }

        let eval0 = evaluate(&data.normals, a.entries());
        let done = |f: &Frame| f.eval.iter().all(Zero::is_zero) && units.contains_vector(&f.residual);
        let mut stack = vec![Frame {
            residual: a.clone(),
            eval: eval0,
            start: 0,
            next: 0,
            chosen: None,
        }];
        if done(&stack[0]) {
            return Ok(Some((vec![0; gens.len()], a.clone())));
        }
        let mut failed: HashSet<(ExponentVector, usize)> = HashSet::new();
        let mut nodes: u64 = 0;
        while let Some(top) = stack.last_mut() {
            let mut pushed = None;
            while top.next < gens.len() {
                let k = top.next;
                top.next += 1;
                let eval: Vec<i128> = top.eval.iter().zip(&data.evals[k]).map(|(x, y)| x - y).collect();
                if eval.iter().any(|&x| x < 0) {
                    continue;
                }
                let residual = &top.residual - gens[k];
                if failed.contains(&(residual.clone(), k)) {
                    continue;
                }
                pushed = Some(Frame {
                    residual,
                    eval,
                    start: k,
                    next: k,
                    chosen: Some(k),
                });
                break;
            }
            match pushed {
                Some(frame) => {
                    nodes += 1;
                    if nodes > budget {
                        return Err(Error::Undecided(format!("membership search exceeded {budget} nodes")));
                    }
                    if done(&frame) {
                        let mut counts = vec![0u64; gens.len()];
                        for f in stack.iter().chain(std::iter::once(&frame)) {
                            if let Some(k) = f.chosen {
                                counts[k] += 1;
                            }
                        }
                        return Ok(Some((counts, frame.residual)));
                    }
                    // weight zero but outside the unit group: dead end
                    if frame.eval.iter().all(Zero::is_zero) {
                        failed.insert((frame.residual, frame.start));
                        continue;
                    }
                    stack.push(frame);
                }
                None => {
                    let f = stack.pop().expect("nonempty");
                    failed.insert((f.residual, f.start));
                }
            }
        }
        Ok(None)
    }

    /// Exact normality test; see [`FgMonoid::normality_with_budget`].
    pub fn is_normal(&self) -> Verdict {
        self.normality_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    /// Decides whether Cone(M) ∩ ⟨M⟩ = M.
    ///
    /// Every point of Cone(M) ∩ ⟨M⟩ is an ℕ-combination of a linearly
    /// independent generator set S spanning ℝ(M) plus a point of ⟨M⟩ in the
    /// half-open parallelepiped of S. So M is normal iff, for every such S,
    /// the finitely many lattice points of ⟨M⟩ in that parallelepiped lie
    /// in M. The Yes certificate lists them with memberships.
    pub fn normality_with_budget(&self, budget: u64) -> Verdict {
        match self.normality_cover(budget) {
            Ok(Ok(cells)) => Verdict::yes(Certificate::NormalityCover {
                generators: self.generators.clone(),
                cells,
            }),
            Ok(Err(w)) => Verdict::no(w),
            Err(e) => Verdict::unknown(e.to_string()),
        }
    }

    fn normality_cover(&self, budget: u64) -> Result<std::result::Result<Vec<CoverCell>, Witness>> {
        let group = self.group();
        let r = group.rank();
        if r == 0 {
            return Ok(Ok(Vec::new()));
        }
        let basis = group.basis();
        let coords: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .map(|g| group.coordinates(&g.to_big()).expect("generator lies in its group"))
            .collect();
        let mut memo: HashMap<ExponentVector, Option<Vec<BigInt>>> = HashMap::new();
        let mut cells = Vec::new();
        let mut bad: Option<(ExponentVector, Vec<Rational>)> = None;
        let mut visited: u64 = 0;
        for subset in k_subsets(self.generators.len(), r) {
            let t = IntMatrix::from_rows(subset.iter().map(|&i| coords[i].clone()).collect(), r)?;
            if t.det()?.is_zero() {
                continue;
            }
            let t_q: Vec<Vec<Rational>> = t.rows().iter().map(|row| rational::to_rational(row)).collect();
            let (h, _) = hnf(&t);
            let diag: Vec<i64> = (0..r)
                .map(|i| h.get(i, i).to_i64().ok_or(Error::Overflow("parallelepiped index")))
                .collect::<Result<_>>()?;
            let lo = ExponentVector::zero(r);
            let hi = ExponentVector::new(diag.iter().map(|d| d - 1).collect());
            let remaining = budget.saturating_sub(visited);
            let reps = box_points(&lo, &hi, remaining)
                .map_err(|_| Error::BudgetExceeded(format!("normality cover needs more than {budget} points")))?;
            visited += reps.len() as u64;
            let mut points = Vec::new();
            for x in reps {
                let mu = rational::solve_combination(&t_q, &rational::i64_to_rational(x.entries()))
                    .expect("full-rank system");
                let mut xr: Vec<BigInt> = x.to_big();
                let mut frac = Vec::with_capacity(r);
                for (m, row) in mu.iter().zip(t.rows()) {
                    let fl = m.floor().to_integer();
                    for (a, b) in xr.iter_mut().zip(row) {
                        *a -= &fl * b;
                    }
                    frac.push(m - Rational::from_integer(fl));
                }
                let p = ExponentVector::from_big(&basis.left_mul(&xr))?;
                let cert = match memo.get(&p) {
                    Some(c) => c.clone(),
                    None => {
                        let c = self.contains_with_budget(&p, budget)?;
                        memo.insert(p.clone(), c.clone());
                        c
                    }
                };
                match cert {
                    Some(coefficients) => points.push(Membership { point: p, coefficients }),
                    None => {
                        if bad.as_ref().is_none_or(|(q, _)| l1_lex(&p) < l1_lex(q)) {
                            bad = Some((p, frac));
                        }
                    }
                }
            }
            cells.push(CoverCell { subset, points });
        }
        let Some((p, frac)) = bad else {
            return Ok(Ok(cells));
        };
        let bound = frac.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let bound = bound.to_u64().ok_or(Error::Overflow("normality multiplier"))?;
        for m in 2..=bound {
            if let Some(coefficients) = self.contains_with_budget(&p.scale(m as i64), budget)? {
                return Ok(Err(Witness::NotNormalPoint {
                    point: p.clone(),
                    multiplier: m,
                    membership: Membership {
                        point: p.scale(m as i64),
                        coefficients,
                    },
                }));
            }
        }
        unreachable!("the denominator lcm multiplies a parallelepiped point into M")
    }

    /// Gaps `Cone(M) ∩ ℤⁿ \ M` inside the box `[lo, hi]` with a status saying
    /// what is known about the full gap set.
    pub fn gap_set(&self, lo: &ExponentVector, hi: &ExponentVector, budget: u64) -> Result<GapReport> {
        for v in [lo, hi] {
            if v.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: v.len(),
                });
            }
        }
        box_volume(lo, hi, budget)?;
        let report = |status, elements, lo: &ExponentVector, hi: &ExponentVector, evidence| GapReport {
            status,
            elements,
            lo: lo.clone(),
            hi: hi.clone(),
            evidence,
        };

        if self.n == 1 {
            match self.classify()? {
                ZClass::Zero | ZClass::Group(1) => return Ok(report(GapStatus::Empty, Vec::new(), lo, hi, None)),
                ZClass::Nonnegative(1) | ZClass::Nonpositive(1) => {
                    let (s, _, sign) = self.scaled_semigroup()?.expect("one-signed");
                    let mut gaps: Vec<i64> = s.gaps().iter().map(|&g| sign * g as i64).collect();
                    gaps.sort_unstable();
                    if gaps.is_empty() {
                        return Ok(report(GapStatus::Empty, Vec::new(), lo, hi, None));
                    }
                    let lo2 = ExponentVector::new(vec![lo.entries()[0].min(gaps[0])]);
                    let hi2 = ExponentVector::new(vec![hi.entries()[0].max(*gaps.last().expect("nonempty"))]);
                    let elements = gaps.into_iter().map(|g| ExponentVector::new(vec![g])).collect();
                    return Ok(report(GapStatus::FiniteExact, elements, &lo2, &hi2, None));
                }
                _ => {}
            }
        }

        if is_direct_summand(self.group()) && self.normality_with_budget(budget).is_yes() {
            return Ok(report(GapStatus::Empty, Vec::new(), lo, hi, None));
        }

        let cone = self.cone();
        let mut elements = Vec::new();
        for p in box_points(lo, hi, budget)? {
            if cone.contains(&p) && !self.is_member(&p)? {
                elements.push(p);
            }
        }
        if let Some(line) = self.witness_line(&elements)? {
            return Ok(report(GapStatus::InfiniteEvidence, elements, lo, hi, Some(line)));
        }
        let outer = |p: &ExponentVector| {
            (0..self.n).any(|i| {
                let (a, l, h) = (p.entries()[i], lo.entries()[i], hi.entries()[i]);
                (a == h && h > 0) || (a == l && l < 0)
            })
        };
        let status = if elements.iter().any(outer) {
            GapStatus::Unknown
        } else {
            GapStatus::FiniteWithinBox
        };
        Ok(report(status, elements, lo, hi, None))
    }

    /// Looks for `g + k·d ∈ Cone \ M` for `k < WITNESS_SAMPLES`, with `g` among
    /// the smallest found gaps and `d` among the generators and ±eᵢ.
    fn witness_line(&self, gaps: &[ExponentVector]) -> Result<Option<WitnessLine>> {
        let mut bases: Vec<&ExponentVector> = gaps.iter().collect();
        bases.sort_by_key(|g| l1_lex(g));
        bases.truncate(WITNESS_BASES);
        let mut dirs: Vec<ExponentVector> = self.generators.clone();
        for i in 0..self.n {
            let e = ExponentVector::unit(self.n, i);
            dirs.push(-&e);
            dirs.push(e);
        }
        dirs.sort_by_key(l1_lex);
        dirs.dedup();
        let cone = self.cone();
        for g in bases {
            'dir: for d in &dirs {
                let mut p = g.clone();
                for k in 0..WITNESS_SAMPLES {
                    if k > 0 {
                        p = &p + d;
                        if !cone.contains(&p) || self.is_member(&p)? {
                            continue 'dir;
                        }
                    }
                }
                return Ok(Some(WitnessLine {
                    base: g.clone(),
                    direction: d.clone(),
                    samples: WITNESS_SAMPLES,
                }));
            }
        }
        Ok(None)
    }
}

fn evaluate(normals: &[Vec<i128>], p: &[i64]) -> Vec<i128> {
    normals
        .iter()
        .map(|v| v.iter().zip(p).map(|(a, &b)| a * b as i128).sum())
        .collect()
}

/// A relation `Σ cₖ gₖ = 0` with every `cₖ ≥ 1`, for generators whose cone is
/// a linear space. Each `−gₖ` is a nonnegative combination of a linearly
/// independent subset (Carathéodory); the per-generator relations are summed.
fn positive_relation(gens: &[ExponentVector]) -> Vec<BigInt> {
    let k = gens.len();
    if k == 0 {
        return Vec::new();
    }
    let q: Vec<Vec<Rational>> = gens.iter().map(|g| rational::i64_to_rational(g.entries())).collect();
    let r = rational::rank(&q);
    let bases: Vec<Vec<usize>> = k_subsets(k, r)
        .into_iter()
        .filter(|s| rational::rank(&s.iter().map(|&i| q[i].clone()).collect::<Vec<_>>()) == r)
        .collect();
    let mut total = vec![BigInt::zero(); k];
    for j in 0..k {
        let target: Vec<Rational> = q[j].iter().map(|x| -x).collect();
        let (subset, mu) = bases
            .iter()
            .find_map(|s| {
                let vecs: Vec<Vec<Rational>> = s.iter().map(|&i| q[i].clone()).collect();
                rational::solve_combination(&vecs, &target)
                    .filter(|mu| rational::is_nonnegative(mu))
                    .map(|mu| (s, mu))
            })
            .expect("generators of a linear space have a conic representation of each negative");
        let l = mu.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        total[j] += &l;
        for (&i, m) in subset.iter().zip(&mu) {
            total[i] += (m * Rational::from_integer(l.clone())).to_integer();
        }
    }
    total
}
