//! Exact integer linear algebra on ℤⁿ.
//!
//! Everything here works over arbitrary-precision integers: Hermite and
//! Smith normal forms with transformation matrices, subgroups of ℤⁿ in
//! canonical (row Hermite) form, saturation and direct-summand tests, and
//! completion of a direct summand's basis to a basis of ℤⁿ.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of ℤⁿ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|&a| a * k).collect())
    }

    /// ℓ¹ norm, the norm used by the gap-set bounds.
    pub fn l1_norm(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    pub fn dot(&self, other: &ExponentVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_big(&self, other: &[BigInt]) -> BigInt {
        self.0.iter().zip(other).map(|(&a, b)| BigInt::from(a) * b).sum()
    }

    pub fn to_big(&self) -> Vec<BigInt> {
        self.0.iter().map(|&a| BigInt::from(a)).collect()
    }

    pub fn from_big(v: &[BigInt]) -> Result<Self> {
        v.iter()
            .map(|a| a.to_i64().ok_or(Error::Overflow("exponent exceeds i64")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Row-vector times matrix, `self · m`.
    pub fn mul_matrix(&self, m: &IntMatrix) -> Result<ExponentVector> {
        if m.nrows() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: self.len(),
            });
        }
        ExponentVector::from_big(&m.left_mul(&self.to_big()))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Checks that every vector has length `n`.
pub fn check_lengths(vectors: &[ExponentVector], n: usize) -> Result<()> {
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(data: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        for r in &data {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(IntMatrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
                .collect(),
            cols,
        )
    }

    pub fn from_vectors(vectors: &[ExponentVector], cols: usize) -> Result<Self> {
        Self::from_rows(vectors.iter().map(|v| v.to_big()).collect(), cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn row_vector(&self, i: usize) -> Result<ExponentVector> {
        ExponentVector::from_big(&self.data[i])
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row_vector(i).map(ExponentVector::into_entries))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    /// The submatrix made of the first `k` rows.
    pub fn top_rows(&self, k: usize) -> IntMatrix {
        IntMatrix {
            rows: k,
            cols: self.cols,
            data: self.data[..k].to_vec(),
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i][j] += a * &rhs.data[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (a, row) in v.iter().zip(&self.data) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                *o += a * b;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        // U·self = H; H is the identity for a unimodular square matrix.
        let (h, u) = hnf(self);
        debug_assert_eq!(h, IntMatrix::identity(self.rows));
        Ok(u)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.data.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.data {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for a in &mut self.data[i] {
            *a = -&*a;
        }
    }

    /// row[dst] -= q · row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = q * &self.data[src][j];
            self.data[dst][j] -= t;
        }
    }

    /// col[dst] -= q · col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in &mut self.data {
            let t = q * &row[src];
            row[dst] -= t;
        }
    }

    /// Replaces rows (i, j) by (a·ri + b·rj, c·ri + d·rj).
    fn combine_rows(&mut self, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        for k in 0..self.cols {
            let ri = self.data[i][k].clone();
            let rj = self.data[j][k].clone();
            self.data[i][k] = a * &ri + b * &rj;
            self.data[j][k] = c * ri + d * rj;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, a) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{a}")?;
            }
        }
        write!(f, "]")
    }
}

/// Row Hermite normal form. Returns `(H, U)` with `U·M = H`, `|det U| = 1`,
/// pivots positive and entries above each pivot reduced into `[0, pivot)`.
/// Zero rows of `H` are at the bottom.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.nrows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..m.ncols() {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.data[i][c].is_zero() {
                continue;
            }
            let a = h.data[r][c].clone();
            let b = h.data[i][c].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let c2 = -(&b / &g);
            let d2 = &a / &g;
            h.combine_rows(r, i, &x, &y, &c2, &d2);
            u.combine_rows(r, i, &x, &y, &c2, &d2);
        }
        if h.data[r][c].is_zero() {
            continue;
        }
        if h.data[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.data[r][c].clone();
        for i in 0..r {
            let q = h.data[i][c].div_floor(&pivot);
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Result of [`snf`]: `U·M·V = D` with `D` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries d₁ | d₂ | …, including trailing zeros up to min(m, n).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// The nonzero elementary divisors.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }
}

/// Smith normal form by alternating row/column elimination.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a.data[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a.data[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return SmithDecomposition { d: a, u, v };
            };
            if bi != t {
                a.swap_rows(bi, t);
                u.swap_rows(bi, t);
            }
            if bj != t {
                a.swap_cols(bj, t);
                v.swap_cols(bj, t);
            }
            let pivot = a.data[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = &a.data[i][t] / &pivot;
                a.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                clean &= a.data[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = &a.data[t][j] / &pivot;
                a.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                clean &= a.data[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.data[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    // row_t += row_i, then eliminate again
                    let neg_one = -BigInt::one();
                    a.sub_row(t, i, &neg_one);
                    u.sub_row(t, i, &neg_one);
                }
                None => break,
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { d: a, u, v }
}

/// A subgroup of ℤⁿ held by its canonical row-HNF basis, so equality of
/// subgroups is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeSubgroup {
    n: usize,
    basis: IntMatrix,
}

impl LatticeSubgroup {
    pub fn zero(n: usize) -> Self {
        LatticeSubgroup {
            n,
            basis: IntMatrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        LatticeSubgroup {
            n,
            basis: IntMatrix::identity(n),
        }
    }

    /// Subgroup generated by the rows of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let (h, _) = hnf(m);
        let rank = h.rows().iter().take_while(|r| r.iter().any(|a| !a.is_zero())).count();
        LatticeSubgroup {
            n: m.ncols(),
            basis: h.top_rows(rank),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.n)
    }

    /// Coordinates of `v` in the HNF basis, if `v` lies in the subgroup.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.n {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for row in self.basis.rows() {
            let p = row.iter().position(|a| !a.is_zero()).expect("nonzero basis row");
            // every entry before the pivot is already cleared
            if rest[..p].iter().any(|a| !a.is_zero()) {
                return None;
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_vector(&self, v: &ExponentVector) -> bool {
        self.contains(&v.to_big())
    }

    /// Whether every basis row of `other` lies in `self`.
    pub fn includes(&self, other: &LatticeSubgroup) -> bool {
        other.basis.rows().iter().all(|r| self.contains(r))
    }
}

/// Canonical basis of the subgroup generated by `generators` (and their negatives).
pub fn group_of(generators: &[ExponentVector]) -> Result<LatticeSubgroup> {
    let first = generators.first().ok_or(Error::EmptyInput("generators"))?;
    let n = first.len();
    check_lengths(generators, n)?;
    Ok(LatticeSubgroup::from_matrix(&IntMatrix::from_vectors(generators, n)?))
}

/// Integer coefficients `c` with `Σ cᵢ·generatorsᵢ = target`, if any.
pub fn express_in_generators(generators: &[ExponentVector], target: &ExponentVector) -> Result<Option<Vec<BigInt>>> {
    let n = target.len();
    check_lengths(generators, n)?;
    if generators.is_empty() {
        return Ok(target.is_zero().then(Vec::new));
    }
    let g = IntMatrix::from_vectors(generators, n)?;
    let (h, u) = hnf(&g);
    let rank = h.rows().iter().take_while(|r| r.iter().any(|a| !a.is_zero())).count();
    let sub = LatticeSubgroup {
        n,
        basis: h.top_rows(rank),
    };
    let Some(coords) = sub.coordinates(&target.to_big()) else {
        return Ok(None);
    };
    let mut padded = coords;
    padded.resize(generators.len(), BigInt::zero());
    Ok(Some(u.left_mul(&padded)))
}

pub fn elementary_divisors(h: &LatticeSubgroup) -> Vec<BigInt> {
    if h.rank() == 0 {
        return Vec::new();
    }
    snf(&h.basis).elementary_divisors()
}

/// ℤⁿ/H is torsion-free, i.e. every elementary divisor of the basis is 1.
pub fn is_direct_summand(h: &LatticeSubgroup) -> bool {
    elementary_divisors(h).iter().all(One::is_one)
}

/// Rows of V⁻¹ from the Smith form of H's basis. The first `rank` rows span
/// ℝ(H) ∩ ℤⁿ, and row k scaled by dₖ lies in H.
fn smith_frame(h: &LatticeSubgroup) -> (Vec<BigInt>, IntMatrix) {
    let s = snf(&h.basis);
    let vinv = s.v.inverse_unimodular().expect("Smith column transform is unimodular");
    (s.diagonal(), vinv)
}

/// ℝ(H) ∩ ℤⁿ.
pub fn saturation(h: &LatticeSubgroup) -> LatticeSubgroup {
    if h.rank() == 0 {
        return h.clone();
    }
    let (_, vinv) = smith_frame(h);
    LatticeSubgroup::from_matrix(&vinv.top_rows(h.rank()))
}

/// A unimodular `C` whose first `r` rows are the canonical basis of `H` and
/// whose rows form a basis of ℤⁿ.
pub fn extend_to_basis(h: &LatticeSubgroup) -> Result<(IntMatrix, usize)> {
    let n = h.ambient();
    let r = h.rank();
    if r == 0 {
        return Ok((IntMatrix::identity(n), 0));
    }
    if !is_direct_summand(h) {
        return Err(Error::NotSaturated);
    }
    let (_, vinv) = smith_frame(h);
    let mut rows: Vec<Vec<BigInt>> = h.basis.rows().to_vec();
    rows.extend(vinv.rows()[r..].iter().cloned());
    let c = IntMatrix::from_rows(rows, n)?;
    debug_assert!(c.is_unimodular());
    Ok((c, r))
}

/// An element `t ∉ H` with `m·t ∈ H` for the least elementary divisor `m > 1`,
/// or `None` when H is a direct summand.
pub fn torsion_witness(h: &LatticeSubgroup) -> Option<(Vec<BigInt>, BigInt)> {
    if h.rank() == 0 {
        return None;
    }
    let (diag, vinv) = smith_frame(h);
    let k = (0..h.rank()).find(|&k| diag[k] > BigInt::one())?;
    let mut t = vinv.row(k).to_vec();
    if t.iter().find(|a| !a.is_zero()).is_some_and(Signed::is_negative) {
        t.iter_mut().for_each(|a| *a = -&*a);
    }
    Some((t, diag[k].clone()))
}
