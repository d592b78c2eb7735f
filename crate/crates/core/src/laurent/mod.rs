//! Sparse Laurent polynomials `Σ r_a x^a` over ℚ, 𝔽_p or ℤ.

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, IntMatrix};
use crate::rational::Rational;

pub use parse::{infer_nvars, parse};

/// The exact coefficient domain of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientDomain {
    Rationals,
    PrimeField(u64),
    Integers,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientDomain {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(CoefficientDomain::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientDomain::Integers)
    }

    /// Number of elements; `None` for infinite domains.
    pub fn size(&self) -> Option<u64> {
        match self {
            CoefficientDomain::PrimeField(p) => Some(*p),
            _ => None,
        }
    }

    /// Whether the domain contains a field with at least `d` elements.
    pub fn has_field_of_size(&self, d: u64) -> bool {
        match self {
            CoefficientDomain::Rationals => true,
            CoefficientDomain::PrimeField(p) => *p >= d,
            // ℤ contains no subfield
            CoefficientDomain::Integers => false,
        }
    }

    /// Maps a rational into the domain.
    pub fn normalize(&self, c: Rational) -> Result<Rational> {
        match self {
            CoefficientDomain::Rationals => Ok(c),
            CoefficientDomain::Integers => {
                if c.is_integer() {
                    Ok(c)
                } else {
                    Err(Error::Invalid(format!("{c} is not an integer")))
                }
            }
            CoefficientDomain::PrimeField(p) => {
                let p = BigInt::from(*p);
                let den = c.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::Invalid(format!("denominator of {c} vanishes mod {p}")));
                }
                let inv = mod_inverse(&den, &p);
                Ok(Rational::from_integer((c.numer() * inv).mod_floor(&p)))
            }
        }
    }

    pub fn is_unit(&self, c: &Rational) -> bool {
        match self {
            CoefficientDomain::Integers => c.abs().is_one(),
            _ => !c.is_zero(),
        }
    }

    pub fn inverse(&self, c: &Rational) -> Result<Rational> {
        if !self.is_unit(c) {
            return Err(Error::NotAField);
        }
        self.normalize(c.recip())
    }

    pub fn label(&self) -> String {
        match self {
            CoefficientDomain::Rationals => "Q".into(),
            CoefficientDomain::Integers => "Z".into(),
            CoefficientDomain::PrimeField(p) => format!("F{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let eg = a.extended_gcd(p);
    eg.x.mod_floor(p)
}

/// A Laurent polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    domain: CoefficientDomain,
    n: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPoly {
    pub fn zero(domain: CoefficientDomain, n: usize) -> Self {
        LaurentPoly {
            domain,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(domain: CoefficientDomain, n: usize) -> Self {
        Self::monomial(domain, ExponentVector::zero(n), Rational::one()).expect("1 is in every domain")
    }

    pub fn monomial(domain: CoefficientDomain, exponent: ExponentVector, coeff: Rational) -> Result<Self> {
        let n = exponent.len();
        Self::from_terms(domain, n, [(exponent, coeff)])
    }

    /// Builds a polynomial, summing repeated exponents and pruning zeros.
    pub fn from_terms(
        domain: CoefficientDomain,
        n: usize,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.len(),
                });
            }
            let c = domain.normalize(c)?;
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot = domain.normalize(&*slot + c)?;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { domain, n, terms: map })
    }

    pub fn domain(&self) -> CoefficientDomain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_compatible(&self, other: &LaurentPoly) -> Result<()> {
        if self.domain != other.domain || self.n != other.n {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *slot = self.domain.normalize(&*slot + c)?;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            domain: self.domain,
            n: self.n,
            terms,
        })
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-Rational::one()).expect("-1 is in every domain")
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Result<LaurentPoly> {
        let c = self.domain.normalize(c.clone())?;
        Self::from_terms(self.domain, self.n, self.terms.iter().map(|(e, a)| (e.clone(), a * &c)))
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_compatible(other)?;
        let mut terms: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let slot = terms.entry(e1 + e2).or_insert_with(Rational::zero);
                *slot += c1 * c2;
            }
        }
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            let c = self.domain.normalize(c)?;
            if !c.is_zero() {
                out.insert(e, c);
            }
        }
        Ok(LaurentPoly {
            domain: self.domain,
            n: self.n,
            terms: out,
        })
    }

    pub fn pow(&self, k: u32) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one(self.domain, self.n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> LaurentPoly {
        LaurentPoly {
            domain: self.domain,
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `Supp(f)`; empty for the zero polynomial.
    pub fn supp(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    fn coordinate_range(&self, i: usize) -> Result<(i64, i64)> {
        if i == 0 || i > self.n {
            return Err(Error::VariableOutOfRange { index: i, n: self.n });
        }
        let mut it = self.terms.keys().map(|e| e.entries()[i - 1]);
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(lo, hi), a| (lo.min(a), hi.max(a))))
    }

    /// Greatest exponent of `x_i` (1-based).
    pub fn deg(&self, i: usize) -> Result<i64> {
        self.coordinate_range(i).map(|(_, hi)| hi)
    }

    /// Least exponent of `x_i` (1-based).
    pub fn ord(&self, i: usize) -> Result<i64> {
        self.coordinate_range(i).map(|(lo, _)| lo)
    }

    /// The exponent `a` when `f = u·x^a` with `u` a unit of the domain.
    pub fn is_monic_monomial(&self) -> Option<ExponentVector> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        self.domain.is_unit(c).then(|| e.clone())
    }

    /// Whether every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.entries().iter().all(|&a| a >= 0))
    }

    /// The automorphism `x^b ↦ x^{b·A}` for unimodular `A`.
    pub fn apply_unimodular(&self, a: &IntMatrix) -> Result<LaurentPoly> {
        if a.nrows() != self.n || a.ncols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.nrows(),
            });
        }
        if !a.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.mul_matrix(a)?, c.clone());
        }
        Ok(LaurentPoly {
            domain: self.domain,
            n: self.n,
            terms,
        })
    }

    /// Evaluates a polynomial with integer-valued coefficients at a point of
    /// the domain, in the domain.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.entries()) {
                let k32 = i32::try_from(k).map_err(|_| Error::Overflow("exponent"))?;
                if k32 < 0 && x.is_zero() {
                    return Err(Error::Invalid("negative power of zero".into()));
                }
                term *= num_traits::pow::Pow::pow(x, k32);
            }
            acc = self.domain.normalize(acc + term)?;
        }
        Ok(acc)
    }

    /// Canonical text form; see [`parse`].
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn render_coefficient(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_powerprod(e: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for (i, &a) in e.entries().iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, a)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let pp = render_powerprod(e);
            if pp.is_empty() {
                write!(f, "{}", render_coefficient(&abs))?;
            } else if abs.is_one() {
                write!(f, "{pp}")?;
            } else {
                write!(f, "{}*{pp}", render_coefficient(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}; n={}]({})", self.domain.label(), self.n, self)
    }
}

/// Converts a coefficient to `i64` if it is an integer that fits.
pub fn coefficient_to_i64(c: &Rational) -> Option<i64> {
    c.is_integer().then(|| c.numer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CoefficientDomain = CoefficientDomain::Rationals;

    fn p(s: &str, n: usize) -> LaurentPoly {
        parse(s, Q, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x1 - 1", 1).mul(&p("x1 + 1", 1)).unwrap(), p("x1^2 - 1", 1));
        let f = p("x1^3 + 2*x1^-1", 1);
        assert_eq!(f.add(&LaurentPoly::zero(Q, 1)).unwrap(), f);
        // x²(x+y) − x³ = x²y
        let e = p("x1 + x2", 2).mul(&p("x1^2", 2)).unwrap().sub(&p("x1^3", 2)).unwrap();
        assert_eq!(e, p("x1^2*x2", 2));
        assert_eq!(f.add(&p("x1", 2)), Err(Error::DomainMismatch));
    }

    #[test]
    fn support_sets() {
        assert!(LaurentPoly::zero(Q, 1).supp().is_empty());
        let s: Vec<_> = p("x1^2 - 1", 1).supp().into_iter().collect();
        assert_eq!(s, vec![ExponentVector::from([0]), ExponentVector::from([2])]);
        let s: Vec<_> = p("x1^2*x2", 2).supp().into_iter().collect();
        assert_eq!(s, vec![ExponentVector::from([2, 1])]);
    }

    #[test]
    fn degree_and_order() {
        let f = p("x1^2 - 1", 1);
        assert_eq!((f.deg(1).unwrap(), f.ord(1).unwrap()), (2, 0));
        let g = p("x1^-3 + x1^5", 1);
        assert_eq!((g.deg(1).unwrap(), g.ord(1).unwrap()), (5, -3));
        assert_eq!(LaurentPoly::zero(Q, 1).deg(1), Err(Error::ZeroPolynomial));
        assert_eq!(f.deg(2), Err(Error::VariableOutOfRange { index: 2, n: 1 }));
    }

    #[test]
    fn monic_monomials() {
        assert_eq!(
            p("3*x1^2*x2^-1", 2).is_monic_monomial(),
            Some(ExponentVector::from([2, -1]))
        );
        let z = parse("2*x1", CoefficientDomain::Integers, 1).unwrap();
        assert_eq!(z.is_monic_monomial(), None);
        let z = parse("-x1", CoefficientDomain::Integers, 1).unwrap();
        assert_eq!(z.is_monic_monomial(), Some(ExponentVector::from([1])));
        assert_eq!(p("x1 + 1", 1).is_monic_monomial(), None);
    }

    #[test]
    fn unimodular_action() {
        let f = p("x1^2*x2 + 3", 2);
        assert_eq!(f.apply_unimodular(&IntMatrix::identity(2)).unwrap(), f);
        let swap = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        assert_eq!(p("x1^2*x2", 2).apply_unimodular(&swap).unwrap(), p("x1*x2^2", 2));
        let bad = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(f.apply_unimodular(&bad), Err(Error::NotUnimodular));
    }

    #[test]
    fn prime_field_reduction() {
        let f2 = CoefficientDomain::PrimeField(2);
        let a = parse("x1 + 1", f2, 1).unwrap();
        assert_eq!(a.mul(&a).unwrap(), parse("x1^2 + 1", f2, 1).unwrap());
        assert_eq!(parse("3*x1 + 2", f2, 1).unwrap(), parse("x1", f2, 1).unwrap());
        let f5 = CoefficientDomain::PrimeField(5);
        assert_eq!(parse("1/2", f5, 1).unwrap(), parse("3", f5, 1).unwrap());
        assert!(CoefficientDomain::prime_field(4).is_err());
    }

    #[test]
    fn render_canonical() {
        assert_eq!(p("x1^2 - 1", 1).render(), "-1 + x1^2");
        assert_eq!(p("3 + x1^2*x2^-1", 2).render(), "3 + x1^2*x2^-1");
        assert_eq!(p("-1/2*x1 + x2", 2).render(), "x2 - 1/2*x1");
        assert_eq!(LaurentPoly::zero(Q, 2).render(), "0");
    }

    #[test]
    fn evaluation() {
        let f2 = CoefficientDomain::PrimeField(2);
        let f = parse("x1^2 + x1 + 1", f2, 1).unwrap();
        assert_eq!(f.evaluate(&[Rational::zero()]).unwrap(), Rational::one());
        assert_eq!(f.evaluate(&[Rational::one()]).unwrap(), Rational::one());
    }
}
