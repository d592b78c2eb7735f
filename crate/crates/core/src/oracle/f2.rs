//! Univariate polynomials over F₂ as bit masks, and the constructive
//! witnesses for the monomial-free qfc algebra `A = F₂[f : f irreducible,
//! deg f ≥ 2]`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{CoefficientDomain, LaurentPoly};
use crate::rational::Rational;

pub const MAX_IRREDUCIBLE_DEGREE: u32 = 16;
/// Supports of `strong_qfc_witness_f2` inputs lie in `[-16, 16]`.
pub const WITNESS_SUPPORT_RADIUS: i64 = 16;

const F2: CoefficientDomain = CoefficientDomain::PrimeField(2);

/// Bit `i` is the coefficient of `x^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Poly(pub u64);

impl F2Poly {
    pub const ONE: F2Poly = F2Poly(1);
    pub const X: F2Poly = F2Poly(0b10);
    pub const X_PLUS_ONE: F2Poly = F2Poly(0b11);
    /// `x² + x = (x² + x + 1) + 1`.
    pub const X_TIMES_X_PLUS_ONE: F2Poly = F2Poly(0b110);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn degree(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn mul(self, other: F2Poly) -> Result<F2Poly> {
        match (self.degree(), other.degree()) {
            (Some(a), Some(b)) if a + b > 63 => return Err(Error::Overflow("F2 polynomial degree")),
            (None, _) | (_, None) => return Ok(F2Poly(0)),
            _ => {}
        }
        let (mut a, mut b, mut acc) = (self.0, other.0, 0u64);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        Ok(F2Poly(acc))
    }

    pub fn pow(self, k: u32) -> Result<F2Poly> {
        (0..k).try_fold(F2Poly::ONE, |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(self, d: F2Poly) -> (F2Poly, F2Poly) {
        let dd = d.degree().expect("nonzero divisor");
        let (mut q, mut r) = (0u64, self.0);
        while let Some(dr) = F2Poly(r).degree() {
            if dr < dd {
                break;
            }
            q |= 1 << (dr - dd);
            r ^= d.0 << (dr - dd);
        }
        (F2Poly(q), F2Poly(r))
    }

    /// Value at 0 or 1.
    pub fn eval(self, at_one: bool) -> bool {
        if at_one {
            self.0.count_ones() % 2 == 1
        } else {
            self.0 & 1 == 1
        }
    }

    /// Trial division by every polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        (2u64..1 << (d / 2 + 1)).all(|q| self.divrem(F2Poly(q)).1 .0 != 0)
    }

    pub fn to_laurent(self) -> LaurentPoly {
        let terms = (0..64)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| (ExponentVector::new(vec![i]), Rational::from_integer(1.into())));
        LaurentPoly::from_terms(F2, 1, terms).expect("valid F2 terms")
    }

    /// A polynomial over F₂ in one variable with exponents in `0..64`.
    pub fn from_laurent(f: &LaurentPoly) -> Result<F2Poly> {
        check_f2(f)?;
        let mut mask = 0u64;
        for (e, _) in f.terms() {
            let k = e.entries()[0];
            if k < 0 {
                return Err(Error::NegativeExponent);
            }
            if k > 63 {
                return Err(Error::Overflow("F2 polynomial degree"));
            }
            mask |= 1 << k;
        }
        Ok(F2Poly(mask))
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_laurent().render())
    }
}

fn check_f2(f: &LaurentPoly) -> Result<()> {
    if f.domain() != F2 || f.nvars() != 1 {
        return Err(Error::Invalid("expected a one-variable polynomial over F2".into()));
    }
    Ok(())
}

/// Irreducibles of degree `1..=max_degree` by trial division against the
/// lower-degree ones.
fn irreducibles_upto(max_degree: u32) -> Vec<F2Poly> {
    static TABLE: OnceLock<Vec<F2Poly>> = OnceLock::new();
    if max_degree <= MAX_IRREDUCIBLE_DEGREE {
        let table = TABLE.get_or_init(|| irreducibles_computed(MAX_IRREDUCIBLE_DEGREE));
        return table
            .iter()
            .copied()
            .take_while(|q| q.degree() <= Some(max_degree))
            .collect();
    }
    irreducibles_computed(max_degree)
}

fn irreducibles_computed(max_degree: u32) -> Vec<F2Poly> {
    let mut found: Vec<F2Poly> = Vec::new();
    for d in 1..=max_degree {
        for mask in (1u64 << d)..(1u64 << (d + 1)) {
            let p = F2Poly(mask);
            let irreducible = found
                .iter()
                .take_while(|q| 2 * q.degree().expect("nonzero") <= d)
                .all(|&q| p.divrem(q).1 .0 != 0);
            if irreducible {
                found.push(p);
            }
        }
    }
    found
}

/// All monic irreducible polynomials over F₂ of degree `2..=max_degree`.
pub fn irreducibles_f2(max_degree: u32) -> Result<Vec<F2Poly>> {
    if max_degree > MAX_IRREDUCIBLE_DEGREE {
        return Err(Error::Invalid(format!(
            "max degree {max_degree} exceeds {MAX_IRREDUCIBLE_DEGREE}"
        )));
    }
    Ok(irreducibles_upto(max_degree)
        .into_iter()
        .filter(|p| p.degree() >= Some(2))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// An irreducible polynomial of degree ≥ 2, a generator of A.
    Generator,
    /// `x(x+1) = (x² + x + 1) + 1`.
    XTimesXPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFactor {
    #[serde(with = "f2_text")]
    pub poly: F2Poly,
    pub multiplicity: u32,
    pub kind: FactorKind,
}

/// `x^shift · f = Π factorᵢ^{multiplicityᵢ}`, a product of elements of A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongQfcWitness {
    pub shift: i64,
    pub factors: Vec<WitnessFactor>,
}

mod f2_text {
    use super::F2Poly;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &F2Poly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<F2Poly, D::Error> {
        let text = String::deserialize(d)?;
        let f = crate::laurent::parse(&text, super::F2, 1).map_err(serde::de::Error::custom)?;
        F2Poly::from_laurent(&f).map_err(serde::de::Error::custom)
    }
}

/// Writes `f = x^m h` with `h(0) = 1`, factors `h = (x+1)^b Π gᵢ^{cᵢ}` and
/// returns the shift `b − m`, so that `x^{b−m} f = (x(x+1))^b Π gᵢ^{cᵢ}`.
pub fn strong_qfc_witness_f2(f: &LaurentPoly) -> Result<StrongQfcWitness> {
    check_f2(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lo = f.ord(1)?;
    let hi = f.deg(1)?;
    if lo < -WITNESS_SUPPORT_RADIUS || hi > WITNESS_SUPPORT_RADIUS {
        return Err(Error::Invalid(format!(
            "support must lie in [-{WITNESS_SUPPORT_RADIUS}, {WITNESS_SUPPORT_RADIUS}]"
        )));
    }
    let mut h = F2Poly::from_laurent(&f.shift(&ExponentVector::new(vec![-lo])))?;
    // degree ≤ 32: a composite has a factor of degree ≤ 16
    let table = irreducibles_upto(MAX_IRREDUCIBLE_DEGREE);
    let mut b = 0u32;
    let mut factors = Vec::new();
    for &q in &table {
        if 2 * q.degree().expect("nonzero") > h.degree().expect("nonzero") {
            break;
        }
        let mut c = 0;
        loop {
            let (quot, rem) = h.divrem(q);
            if !rem.is_zero() {
                break;
            }
            h = quot;
            c += 1;
        }
        if c == 0 {
            continue;
        }
        match q {
            F2Poly::X => unreachable!("h(0) = 1"),
            F2Poly::X_PLUS_ONE => b = c,
            _ => factors.push(WitnessFactor {
                poly: q,
                multiplicity: c,
                kind: FactorKind::Generator,
            }),
        }
    }
    if h == F2Poly::X_PLUS_ONE {
        b += 1;
    } else if h.degree() > Some(0) {
        factors.push(WitnessFactor {
            poly: h,
            multiplicity: 1,
            kind: FactorKind::Generator,
        });
    }
    if b > 0 {
        factors.insert(
            0,
            WitnessFactor {
                poly: F2Poly::X_TIMES_X_PLUS_ONE,
                multiplicity: b,
                kind: FactorKind::XTimesXPlusOne,
            },
        );
    }
    Ok(StrongQfcWitness {
        shift: b as i64 - lo,
        factors,
    })
}

/// Re-multiplies the factors and checks each one lies in A.
pub fn verify_strong_witness(f: &LaurentPoly, w: &StrongQfcWitness) -> Result<bool> {
    check_f2(f)?;
    let mut prod = LaurentPoly::one(F2, 1);
    for fac in &w.factors {
        let ok = match fac.kind {
            FactorKind::Generator => fac.poly.degree() >= Some(2) && fac.poly.is_irreducible(),
            FactorKind::XTimesXPlusOne => fac.poly == F2Poly::X_TIMES_X_PLUS_ONE,
        };
        if !ok {
            return Ok(false);
        }
        prod = prod.mul(&fac.poly.to_laurent().pow(fac.multiplicity)?)?;
    }
    Ok(prod == f.shift(&ExponentVector::new(vec![w.shift])))
}

/// `ε₀(f) = ε₁(f)`: holds on all of A, fails on every `xⁿ` with `n ≥ 1`.
pub fn no_monomial_invariant_f2(f: &LaurentPoly) -> Result<bool> {
    check_f2(f)?;
    let mut at_zero = false;
    let mut at_one = false;
    for (e, c) in f.terms() {
        let k = e.entries()[0];
        if k < 0 {
            return Err(Error::NegativeExponent);
        }
        let odd = c.numer() % 2u32 != 0.into();
        at_one ^= odd;
        if k == 0 {
            at_zero = odd;
        }
    }
    Ok(at_zero == at_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        crate::laurent::parse(s, F2, 1).unwrap()
    }

    #[test]
    fn small_irreducibles() {
        assert_eq!(irreducibles_f2(2).unwrap(), vec![F2Poly(0b111)]);
        let cubics: Vec<F2Poly> = irreducibles_f2(3)
            .unwrap()
            .into_iter()
            .filter(|q| q.degree() == Some(3))
            .collect();
        assert_eq!(cubics, vec![F2Poly(0b1011), F2Poly(0b1101)]);
        assert!(irreducibles_f2(17).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = strong_qfc_witness_f2(&p("x1^3 + x1")).unwrap();
        assert_eq!(w.shift, 1);
        assert_eq!(w.factors.len(), 1);
        assert_eq!(w.factors[0].multiplicity, 2);
        let w = strong_qfc_witness_f2(&p("x1^2 + x1 + 1")).unwrap();
        assert_eq!((w.shift, w.factors[0].poly), (0, F2Poly(0b111)));
        let f = p("x1 + 1 + x1^-1");
        let w = strong_qfc_witness_f2(&f).unwrap();
        assert_eq!(w.shift, 1);
        assert!(verify_strong_witness(&f, &w).unwrap());
    }

    #[test]
    fn invariant_examples() {
        assert!(no_monomial_invariant_f2(&p("x1^2 + x1 + 1")).unwrap());
        assert!(!no_monomial_invariant_f2(&p("x1^5")).unwrap());
        let g = p("x1^2 + x1 + 1");
        let f = g.mul(&p("x1^3 + x1 + 1")).unwrap().add(&g).unwrap();
        assert!(no_monomial_invariant_f2(&f).unwrap());
        assert_eq!(no_monomial_invariant_f2(&p("x1^-1")), Err(Error::NegativeExponent));
    }
}
