//! Rational polyhedral cones generated by finitely many lattice points.
//!
//! A cone is described inside the real span of its generators by a list of
//! integral facet normals. Non-pointed cones need no special casing: facets
//! are found by enumerating hyperplanes spanned by generators, and a cone
//! that is a whole linear space simply has no facets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{check_lengths, group_of, saturation, ExponentVector, LatticeSubgroup};
use crate::rational::{self, Rational};

/// Largest ambient dimension the cone routines accept.
pub const MAX_DIMENSION: usize = 6;

/// Default number of lattice points a box enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000;

/// Half-space description `{u ∈ ℝ(D) : ⟨u, v⟩ ≥ 0 for every normal v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    n: usize,
    normals: Vec<Vec<BigInt>>,
    /// ℝ(D) ∩ ℤⁿ; its basis spans ℝ(D).
    span: LatticeSubgroup,
}

impl ConeHRep {
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Facet normals, primitive integer vectors lying in ℝ(D).
    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    pub fn span(&self) -> &LatticeSubgroup {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    /// `⟨p, v_j⟩` for each normal.
    pub fn evaluate(&self, p: &ExponentVector) -> Vec<BigInt> {
        self.normals.iter().map(|v| p.dot_big(v)).collect()
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        p.len() == self.n && self.span.contains_vector(p) && self.normals.iter().all(|v| !p.dot_big(v).is_negative())
    }

    /// Whether `p` lies in the lineality space (the largest linear subspace
    /// inside the cone).
    pub fn in_lineality_space(&self, p: &ExponentVector) -> bool {
        p.len() == self.n && self.span.contains_vector(p) && self.normals.iter().all(|v| p.dot_big(v).is_zero())
    }
}

fn nonzero_generators(generators: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out: Vec<ExponentVector> = Vec::new();
    for g in generators {
        if !g.is_zero() && !out.contains(g) {
            out.push(g.clone());
        }
    }
    out
}

fn dimension_guard(n: usize) -> Result<()> {
    if n > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(())
}

/// Irredundant half-space representation of Cone(generators) inside its span.
///
/// Every facet of an r-dimensional cone contains r − 1 linearly independent
/// generators, so candidate hyperplanes come from (r − 1)-subsets of the
/// generators; a candidate is a facet exactly when all generators lie on one
/// side of it.
pub fn facet_normals(generators: &[ExponentVector]) -> Result<ConeHRep> {
    let n = generators.first().ok_or(Error::EmptyInput("generators"))?.len();
    facet_normals_in(n, generators)
}

/// As [`facet_normals`], with the ambient dimension given explicitly so an
/// empty generator list (the cone {0}) is allowed.
pub fn facet_normals_in(n: usize, generators: &[ExponentVector]) -> Result<ConeHRep> {
    dimension_guard(n)?;
    check_lengths(generators, n)?;
    let gens = nonzero_generators(generators);
    if gens.is_empty() {
        return Ok(ConeHRep {
            n,
            normals: Vec::new(),
            span: LatticeSubgroup::zero(n),
        });
    }
    let span = saturation(&group_of(&gens)?);
    let r = span.rank();
    let basis: Vec<Vec<Rational>> = span
        .basis()
        .rows()
        .iter()
        .map(|row| rational::to_rational(row))
        .collect();
    let gens_q: Vec<Vec<Rational>> = gens.iter().map(|g| rational::i64_to_rational(g.entries())).collect();

    let mut normals: Vec<Vec<BigInt>> = Vec::new();
    for subset in k_subsets(gens.len(), r - 1) {
        let chosen: Vec<Vec<Rational>> = subset.iter().map(|&i| gens_q[i].clone()).collect();
        if rational::rank(&chosen) != r - 1 {
            continue;
        }
        // λ with Σ λ_k ⟨B_k, t⟩ = 0 for each t in the subset
        let system: Vec<Vec<Rational>> = chosen
            .iter()
            .map(|t| basis.iter().map(|b| rational::dot(b, t)).collect())
            .collect();
        let ns = rational::nullspace(&system, r);
        debug_assert_eq!(ns.len(), 1);
        let lambda = &ns[0];
        let v: Vec<Rational> = (0..n)
            .map(|j| lambda.iter().zip(&basis).map(|(l, b)| l * &b[j]).sum())
            .collect();
        let mut v = rational::primitive_integer(&v);
        let values: Vec<BigInt> = gens.iter().map(|g| g.dot_big(&v)).collect();
        let nonneg = values.iter().all(|x| !x.is_negative());
        let nonpos = values.iter().all(|x| !x.is_positive());
        if !nonneg && !nonpos {
            continue;
        }
        if !nonneg {
            v.iter_mut().for_each(|a| *a = -&*a);
        }
        if !normals.contains(&v) {
            normals.push(v);
        }
    }
    normals.sort();
    Ok(ConeHRep { n, normals, span })
}

/// Indices of a maximal linearly independent subset of `generators`, greedy in order.
pub fn real_basis_indices(generators: &[ExponentVector]) -> Vec<usize> {
    let q: Vec<Vec<Rational>> = generators
        .iter()
        .map(|g| rational::i64_to_rational(g.entries()))
        .collect();
    rational::greedy_independent(&q)
}

/// `w = Σ aᵢ` over a greedily chosen real basis `{aᵢ}` of the span; `w` is
/// strictly positive on every facet normal.
pub fn interior_vector(generators: &[ExponentVector]) -> Result<ExponentVector> {
    let n = generators.first().ok_or(Error::EmptyInput("generators"))?.len();
    check_lengths(generators, n)?;
    let idx = real_basis_indices(generators);
    if idx.is_empty() {
        return Err(Error::ZeroSpan);
    }
    Ok(idx
        .iter()
        .fold(ExponentVector::zero(n), |acc, &i| &acc + &generators[i]))
}

pub fn cone_contains(hrep: &ConeHRep, p: &ExponentVector) -> bool {
    hrep.contains(p)
}

/// Number of integer points in `[lo, hi]`, or `BoxTooLarge`.
pub fn box_volume(lo: &ExponentVector, hi: &ExponentVector, budget: u64) -> Result<u128> {
    if lo.len() != hi.len() {
        return Err(Error::DimensionMismatch {
            expected: lo.len(),
            found: hi.len(),
        });
    }
    let mut cells: u128 = 1;
    for (&a, &b) in lo.entries().iter().zip(hi.entries()) {
        if a > b {
            return Ok(0);
        }
        cells = cells.saturating_mul((b - a + 1) as u128);
    }
    if cells > budget as u128 {
        return Err(Error::BoxTooLarge { cells, budget });
    }
    Ok(cells)
}

/// All integer points of `[lo, hi]` in lexicographic order.
pub fn box_points(lo: &ExponentVector, hi: &ExponentVector, budget: u64) -> Result<Vec<ExponentVector>> {
    let cells = box_volume(lo, hi, budget)?;
    let mut out = Vec::with_capacity(cells as usize);
    if cells == 0 {
        return Ok(out);
    }
    let n = lo.len();
    let mut cur = lo.entries().to_vec();
    loop {
        out.push(ExponentVector::new(cur.clone()));
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < hi.entries()[k] {
                cur[k] += 1;
                for j in k + 1..n {
                    cur[j] = lo.entries()[j];
                }
                break;
            }
        }
    }
}

/// Lattice points of the cone inside `[lo, hi]`, lexicographically ordered.
pub fn lattice_points_in_box(
    hrep: &ConeHRep,
    lo: &ExponentVector,
    hi: &ExponentVector,
    budget: u64,
) -> Result<Vec<ExponentVector>> {
    if lo.len() != hrep.ambient() {
        return Err(Error::DimensionMismatch {
            expected: hrep.ambient(),
            found: lo.len(),
        });
    }
    Ok(box_points(lo, hi, budget)?
        .into_iter()
        .filter(|p| hrep.contains(p))
        .collect())
}

/// All k-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn gens(vs: &[&[i64]]) -> Vec<ExponentVector> {
        vs.iter().map(|v| ev(v)).collect()
    }

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn orthant_normals() {
        let h = facet_normals(&gens(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(h.normals(), &[b(&[0, 1]), b(&[1, 0])]);
        let h = facet_normals(&gens(&[&[2, 0], &[0, 2], &[2, 3], &[3, 2], &[3, 3]])).unwrap();
        assert_eq!(h.normals(), &[b(&[0, 1]), b(&[1, 0])]);
    }

    #[test]
    fn whole_line_has_no_facets() {
        let h = facet_normals(&gens(&[&[1], &[-1]])).unwrap();
        assert!(h.normals().is_empty());
        for a in -5..=5 {
            assert!(h.contains(&ev(&[a])));
        }
    }

    #[test]
    fn ray_in_the_plane() {
        let h = facet_normals(&gens(&[&[1, 1]])).unwrap();
        assert_eq!(h.dim(), 1);
        let pts = lattice_points_in_box(&h, &ev(&[0, 0]), &ev(&[3, 3]), 100).unwrap();
        assert_eq!(pts, gens(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3]]));
    }

    #[test]
    fn interior_vector_examples() {
        assert_eq!(interior_vector(&gens(&[&[1, 0], &[0, 1]])).unwrap(), ev(&[1, 1]));
        assert_eq!(interior_vector(&gens(&[&[3]])).unwrap(), ev(&[3]));
        let g = gens(&[&[2, 0], &[0, 2], &[3, 3]]);
        let w = interior_vector(&g).unwrap();
        assert_eq!(w, ev(&[2, 2]));
        let h = facet_normals(&g).unwrap();
        assert!(h.evaluate(&w).iter().all(|x| x.is_positive()));
        assert_eq!(interior_vector(&gens(&[&[0, 0]])), Err(Error::ZeroSpan));
    }

    #[test]
    fn membership_examples() {
        let q = facet_normals(&gens(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(cone_contains(&q, &ev(&[5, 1])));
        assert!(!cone_contains(&q, &ev(&[-1, 3])));
        let c = facet_normals(&gens(&[&[2, 1], &[1, 2]])).unwrap();
        assert!(cone_contains(&c, &ev(&[1, 1])));
        assert!(!cone_contains(&c, &ev(&[1, 0])));
    }

    #[test]
    fn box_enumeration() {
        let q = facet_normals(&gens(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(
            lattice_points_in_box(&q, &ev(&[0, 0]), &ev(&[2, 2]), 100)
                .unwrap()
                .len(),
            9
        );
        let line = facet_normals(&gens(&[&[1], &[-1]])).unwrap();
        assert_eq!(
            lattice_points_in_box(&line, &ev(&[-2]), &ev(&[2]), 100).unwrap().len(),
            5
        );
        assert!(matches!(
            lattice_points_in_box(&q, &ev(&[0, 0]), &ev(&[100, 100]), 1000),
            Err(Error::BoxTooLarge { .. })
        ));
    }

    #[test]
    fn half_plane_lineality() {
        let h = facet_normals(&gens(&[&[1, 1], &[-1, -1], &[0, 1]])).unwrap();
        assert_eq!(h.normals(), &[b(&[-1, 1])]);
        assert!(h.in_lineality_space(&ev(&[3, 3])));
        assert!(!h.in_lineality_space(&ev(&[0, 1])));
    }

    #[test]
    fn dimension_guard_rejects_large_n() {
        assert_eq!(
            facet_normals(&[ExponentVector::zero(7)]),
            Err(Error::DimensionTooLarge(7))
        );
    }

    #[test]
    fn subsets() {
        assert_eq!(k_subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
