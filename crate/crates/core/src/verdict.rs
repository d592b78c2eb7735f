//! Three-valued verdicts with machine-checkable certificates and witnesses.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, IntMatrix};
use crate::laurent::{CoefficientDomain, LaurentPoly};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub assumptions: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    pub fn yes(certificate: Certificate) -> Self {
        Verdict {
            answer: Answer::Yes,
            certificate: Some(certificate),
            witness: None,
            assumptions: Vec::new(),
            reason: None,
        }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict {
            answer: Answer::No,
            certificate: None,
            witness: Some(witness),
            assumptions: Vec::new(),
            reason: None,
        }
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Verdict {
            answer: Answer::Unknown,
            certificate: None,
            witness: None,
            assumptions: Vec::new(),
            reason: Some(reason.into()),
        }
    }

    pub fn with_assumption(mut self, a: impl Into<String>) -> Self {
        self.assumptions.push(a.into());
        self
    }

    pub fn with_reason(mut self, r: impl Into<String>) -> Self {
        self.reason = Some(r.into());
        self
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }
}

/// Hypothesis recorded when a verdict relies on the field having at least
/// `d` elements.
pub fn field_size_assumption(d: u64) -> String {
    format!("requires coefficient field with >= {d} elements")
}

/// A ℚ-linear combination of products of generators:
/// `Σ coefficient · Π generators[word]`. The empty word is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expression {
    pub terms: Vec<ExpressionTerm>,
}

impl Expression {
    /// Evaluates the expression over the given generators.
    pub fn evaluate(&self, generators: &[LaurentPoly], domain: CoefficientDomain, n: usize) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(domain, n);
        for t in &self.terms {
            let c: Rational = t
                .coefficient
                .parse()
                .map_err(|_| Error::MalformedCertificate(format!("bad coefficient {:?}", t.coefficient)))?;
            let mut prod = LaurentPoly::one(domain, n).scale(&c)?;
            for &i in &t.word {
                let g = generators
                    .get(i)
                    .ok_or_else(|| Error::MalformedCertificate(format!("generator index {i} out of range")))?;
                prod = prod.mul(g)?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpressionTerm {
    /// Rational coefficient as text, e.g. `-1` or `3/2`.
    pub coefficient: String,
    pub word: Vec<usize>,
}

/// A point of M(A) together with its coefficient certificate over a list of
/// generator exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub point: ExponentVector,
    #[serde(with = "bigjson::vec")]
    pub coefficients: Vec<BigInt>,
}

/// An exponent of M(A) with, for subalgebras, the expression producing the
/// monic monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialGenerator {
    pub exponent: ExponentVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<Expression>,
}

/// `p` and `p + cᵢ` lie in M(A) for the first `rank` rows `cᵢ` of a
/// unimodular `basis_change`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyLemmaWitness {
    #[serde(with = "bigjson::matrix")]
    pub basis_change: Vec<Vec<BigInt>>,
    pub rank: usize,
    pub anchor: ExponentVector,
    /// `anchor · basis_change⁻¹`: the anchor in the new coordinates.
    pub anchor_image: ExponentVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<ExponentVector>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "bigjson::opt")]
    pub multiplier: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<(String, String)>,
    pub generators: Vec<MonomialGenerator>,
    pub memberships: Vec<Membership>,
}

/// One parallelepiped of the normality cover: every lattice point of ⟨M⟩ in
/// `{Σ μᵢ gᵢ : 0 ≤ μᵢ < 1, i ∈ subset}` is listed with its membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCell {
    pub subset: Vec<usize>,
    pub points: Vec<Membership>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Positive,
    Negative,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Rows `0..rank` of the unimodular `basis` form a basis of ⟨M⟩.
    SummandBasis {
        #[serde(with = "bigjson::matrix")]
        basis: Vec<Vec<BigInt>>,
        rank: usize,
    },
    KeyLemmaWitness(KeyLemmaWitness),
    /// `Σ combination[i] · exponents[i] = 1`.
    GcdOne {
        exponents: Vec<i64>,
        #[serde(with = "bigjson::vec")]
        combination: Vec<BigInt>,
    },
    /// `M = ℕ b₁ + … + ℕ b_free + ℤ b_{free+1} + … + ℤ b_{free+units}` for the
    /// rows `bᵢ` of the unimodular `basis`.
    CoordinateMonoid {
        #[serde(with = "bigjson::matrix")]
        basis: Vec<Vec<BigInt>>,
        free: usize,
        units: usize,
    },
    NormalityCover {
        generators: Vec<ExponentVector>,
        cells: Vec<CoverCell>,
    },
    /// The generators have supports of the given shape and the listed
    /// expressions produce `x` and/or `x⁻¹`.
    MonomialShape {
        shape: Shape,
        monomials: Vec<MonomialGenerator>,
    },
    /// Expressions producing every `x^{±eᵢ}`, so A is the whole Laurent ring.
    UnitMonomials {
        monomials: Vec<MonomialGenerator>,
    },
}

impl Certificate {
    pub fn summand_basis(c: &IntMatrix, rank: usize) -> Self {
        Certificate::SummandBasis {
            basis: c.rows().to_vec(),
            rank,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SummandBasis { .. } => "SummandBasis",
            Certificate::KeyLemmaWitness(_) => "KeyLemmaWitness",
            Certificate::GcdOne { .. } => "GcdOne",
            Certificate::CoordinateMonoid { .. } => "CoordinateMonoid",
            Certificate::NormalityCover { .. } => "NormalityCover",
            Certificate::MonomialShape { .. } => "MonomialShape",
            Certificate::UnitMonomials { .. } => "UnitMonomials",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Every generator is supported in `{0} ∪ [2, ∞)` (or the mirror image when
    /// `negative`), so `A ⊆ k + x^{±2}k[x^{±1}]`; both factors have a nonzero
    /// constant term, forcing the shift to be 0, and one factor has a linear term.
    MissingLinearMonomial { negative: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// `element ∉ ⟨M⟩` but `multiplier · element ∈ ⟨M⟩`.
    TorsionElement {
        #[serde(with = "bigjson::vec")]
        element: Vec<BigInt>,
        #[serde(with = "bigjson::int")]
        multiplier: BigInt,
    },
    /// `f·g ∈ A` (via `product`), while no unit shift places both factors in A.
    CounterexamplePair {
        f: String,
        g: String,
        product: Expression,
        obstruction: Obstruction,
    },
    /// `point ∈ ⟨M⟩`, `multiplier · point ∈ M`, `point ∉ M`.
    NotNormalPoint {
        point: ExponentVector,
        multiplier: u64,
        membership: Membership,
    },
    /// Every discovered exponent and generator support lies in `modulus`·ℤ.
    GcdTooBig { modulus: u64 },
    /// `x^exponent` is a unit of B outside A: outside M, or for general
    /// subalgebras outside the monoid generated by the generator supports.
    UnitOutside { exponent: ExponentVector },
    /// A generator whose inverse is not in A (M is not a group).
    NonInvertible { element: ExponentVector },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::TorsionElement { .. } => "TorsionElement",
            Witness::CounterexamplePair { .. } => "CounterexamplePair",
            Witness::NotNormalPoint { .. } => "NotNormalPoint",
            Witness::GcdTooBig { .. } => "GcdTooBig",
            Witness::UnitOutside { .. } => "UnitOutside",
            Witness::NonInvertible { .. } => "NonInvertible",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.answer)?;
        if let Some(c) = &self.certificate {
            write!(f, " (certificate: {})", c.kind())?;
        }
        if let Some(w) = &self.witness {
            write!(f, " (witness: {})", w.kind())?;
        }
        if let Some(r) = &self.reason {
            write!(f, ": {r}")?;
        }
        Ok(())
    }
}

/// Serde helpers writing big integers as JSON numbers when they fit in an
/// `i64` and as decimal strings otherwise.
pub mod bigjson {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::fmt;

    struct Big<'a>(&'a BigInt);

    impl Serialize for Big<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self.0.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&self.0.to_string()),
            }
        }
    }

    struct Owned(BigInt);

    impl<'de> Deserialize<'de> for Owned {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            struct V;
            impl Visitor<'_> for V {
                type Value = Owned;
                fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    f.write_str("an integer or a decimal string")
                }
                fn visit_i64<E: de::Error>(self, v: i64) -> Result<Owned, E> {
                    Ok(Owned(v.into()))
                }
                fn visit_u64<E: de::Error>(self, v: u64) -> Result<Owned, E> {
                    Ok(Owned(v.into()))
                }
                fn visit_str<E: de::Error>(self, v: &str) -> Result<Owned, E> {
                    v.parse()
                        .map(Owned)
                        .map_err(|_| E::custom(format!("bad integer {v:?}")))
                }
            }
            d.deserialize_any(V)
        }
    }

    pub mod int {
        use super::*;

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            Big(v).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            Ok(Owned::deserialize(d)?.0)
        }
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(Big).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Ok(Option::<Owned>::deserialize(d)?.map(|o| o.0))
        }
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(Big))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Ok(Vec::<Owned>::deserialize(d)?.into_iter().map(|o| o.0).collect())
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(m.iter().map(|row| row.iter().map(Big).collect::<Vec<_>>()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
            Ok(Vec::<Vec<Owned>>::deserialize(d)?
                .into_iter()
                .map(|r| r.into_iter().map(|o| o.0).collect())
                .collect())
        }
    }
}
