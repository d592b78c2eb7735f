//! Text grammar for Laurent polynomials.
//!
//! ```text
//! polynomial := ("+"|"-")? term (("+"|"-") term)*
//! term       := coeff | coeff "*" powerprod | powerprod
//! powerprod  := var ("^" int)? ("*" var ("^" int)?)*
//! var        := "x" index          (index ≥ 1)
//! coeff      := digits ("/" digits)?
//! ```
//! Whitespace is ignored. Prime-field coefficients are reduced mod p.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CoefficientDomain, LaurentPoly};
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::rational::Rational;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    n: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, n: usize) -> Self {
        Parser {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
            n,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let at = self.pos;
        let v = self.digits()?;
        let v: i64 = match i64::try_from(&v) {
            Ok(v) => v,
            Err(_) => {
                self.pos = at;
                return self.err("exponent out of range");
            }
        };
        Ok(if neg { -v } else { v })
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat('/') {
            let den = self.digits()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn factor(&mut self, exps: &mut [i64]) -> Result<()> {
        if !self.eat('x') {
            return self.err("expected variable x<index>");
        }
        let at = self.pos;
        let idx = self.digits()?;
        let idx: usize = match usize::try_from(&idx) {
            Ok(i) if i >= 1 && i <= self.n => i,
            _ => {
                self.pos = at;
                return self.err(format!("variable index must be in 1..={}", self.n));
            }
        };
        let e = if self.eat('^') { self.signed_int()? } else { 1 };
        exps[idx - 1] += e;
        Ok(())
    }

    fn powerprod(&mut self, exps: &mut [i64]) -> Result<()> {
        self.factor(exps)?;
        while self.eat('*') {
            self.factor(exps)?;
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational)> {
        let mut exps = vec![0; self.n];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.eat('*') {
                    self.powerprod(&mut exps)?;
                }
                c
            }
            Some('x') => {
                self.powerprod(&mut exps)?;
                Rational::one()
            }
            _ => return self.err("expected a term"),
        };
        Ok((ExponentVector::new(exps), coeff))
    }

    fn polynomial(&mut self) -> Result<Vec<(ExponentVector, Rational)>> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            self.eat('+');
        }
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if neg { -c } else { c }));
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected character");
        }
        Ok(terms)
    }
}

/// Parses `text` as a polynomial in `x1..xn` over `domain`.
pub fn parse(text: &str, domain: CoefficientDomain, n: usize) -> Result<LaurentPoly> {
    let mut p = Parser::new(text, n);
    let terms = p.polynomial()?;
    LaurentPoly::from_terms(domain, n, terms)
}

/// Largest variable index mentioned in `text` (at least 1).
pub fn infer_nvars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(k) = text[i + 1..j].parse::<usize>() {
                best = best.max(k);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}
