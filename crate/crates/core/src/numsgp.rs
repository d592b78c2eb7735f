//! Numerical semigroups: submonoids of ℕ with finite complement.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    /// `member[a]` for `0 ≤ a ≤ frobenius + 1`.
    member: Vec<bool>,
    apery_cache: Mutex<BTreeMap<u64, Vec<u64>>>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            member: self.member.clone(),
            apery_cache: Mutex::new(self.apery_cache.lock().expect("apery cache").clone()),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl NumericalSemigroup {
    /// Builds the membership table up to `max·min` of the generators, which
    /// bounds the Frobenius number.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput("generators"));
        }
        if gens.contains(&0) {
            return Err(Error::Invalid("numerical semigroup generators must be positive".into()));
        }
        let d = gens.iter().fold(0u64, |g, &a| g.gcd(&a));
        if d > 1 {
            return Err(Error::NotNumerical(d));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let lo = generators[0];
        let hi = *generators.last().expect("nonempty");
        let bound = usize::try_from(lo.saturating_mul(hi)).map_err(|_| Error::Overflow("membership table"))?;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for a in 1..=bound {
            table[a] = generators.iter().any(|&g| (g as usize) <= a && table[a - g as usize]);
        }
        let gaps: Vec<u64> = (0..=bound).filter(|&a| !table[a]).map(|a| a as u64).collect();
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);
        table.truncate((frobenius + 2) as usize);
        Ok(NumericalSemigroup {
            generators,
            frobenius,
            gaps,
            member: table,
            apery_cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest gap, or −1 when the semigroup is ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&a| self.membership(a as i64)).expect("cofinite")
    }

    pub fn membership(&self, a: i64) -> bool {
        if a < 0 {
            return false;
        }
        if a > self.frobenius {
            return true;
        }
        self.member[a as usize]
    }

    /// For each residue `r mod m`, the least element congruent to `r`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.membership(m as i64) {
            return Err(Error::NotMember(m as i64));
        }
        let mut cache = self.apery_cache.lock().expect("apery cache");
        if let Some(w) = cache.get(&m) {
            return Ok(w.clone());
        }
        let mut w: Vec<Option<u64>> = vec![None; m as usize];
        let mut found = 0;
        let mut s = 0u64;
        while found < m {
            let slot = &mut w[(s % m) as usize];
            if slot.is_none() && self.membership(s as i64) {
                *slot = Some(s);
                found += 1;
            }
            s += 1;
        }
        let w: Vec<u64> = w.into_iter().map(|x| x.expect("every residue hit")).collect();
        cache.insert(m, w.clone());
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_five() {
        // sums 3a + 5b ≤ 15: 0 3 5 6 8 9 10 11 12 13 14 15
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.gaps(), &[1, 2, 4, 7]);
        assert_eq!(s.genus(), 4);
        assert!(!s.membership(7));
        assert!(s.membership(8));
        assert!(s.membership(1_000_000));
        assert_eq!(s.multiplicity(), 3);
    }

    #[test]
    fn naturals_and_non_numerical() {
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(s.frobenius(), -1);
        assert!(s.gaps().is_empty());
        assert_eq!(s.apery_set(1).unwrap(), vec![0]);
        assert_eq!(
            NumericalSemigroup::from_generators(&[2]).unwrap_err(),
            Error::NotNumerical(2)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(),
            Error::NotNumerical(2)
        );
        assert!(NumericalSemigroup::from_generators(&[]).is_err());
    }

    #[test]
    fn apery_examples() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 10, 5]);
        assert_eq!(s.apery_set(7), Err(Error::NotMember(7)));
        let w = s.apery_set(5).unwrap();
        assert_eq!(*w.iter().max().unwrap() as i64 - 5, s.frobenius());
    }
}
