use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest torus rank a character may have.
pub const MAX_RANK: usize = 12;

pub type Exponent = Vec<i64>;

/// Integer Laurent polynomial in `rank` torus variables, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentCharacter {
    rank: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentCharacter {
    pub fn zero(rank: usize) -> Self {
        LaurentCharacter { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], BigInt::one())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let mut c = Self::zero(exp.len());
        c.add_term(exp, coeff);
        c
    }

    /// Σ_w x^w with multiplicity, from a list of weights.
    pub fn from_weights<I: IntoIterator<Item = Exponent>>(rank: usize, weights: I) -> Self {
        let mut c = Self::zero(rank);
        for w in weights {
            c.add_term(w, BigInt::one());
        }
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        assert_eq!(exp.len(), self.rank, "exponent of wrong rank");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Lex-largest exponent and its coefficient.
    pub fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Lex-smallest exponent and its coefficient.
    pub fn trailing(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentCharacter {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial x^shift.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentCharacter {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Value at x = (1, …, 1), i.e. the dimension of a genuine character.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes x_i ↦ x_{p(i)}.
    pub fn permute_variables(&self, p: &[usize]) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.rank];
            for (i, &x) in e.iter().enumerate() {
                f[p[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Pushes every exponent through `f`.
    pub fn map_exponents<F: Fn(&[i64]) -> Exponent>(&self, rank: usize, f: F) -> Self {
        let mut out = Self::zero(rank);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Invariance under every permutation of variables inside each block.
    pub fn is_block_symmetric(&self, blocks: &[usize]) -> bool {
        let mut start = 0;
        for &b in blocks {
            for i in start..start + b.saturating_sub(1) {
                let mut p: Vec<usize> = (0..self.rank).collect();
                p.swap(i, i + 1);
                if &self.permute_variables(&p) != self {
                    return false;
                }
            }
            start += b;
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_block_symmetric(&[self.rank])
    }

    /// Exact quotient self / divisor. Fails when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentCharacter) -> Result<LaurentCharacter> {
        let (dlead_e, dlead_c) = divisor
            .leading()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| Error::Input("division by the zero character".into()))?;
        let mut quotient = Self::zero(self.rank);
        let mut rem = self.clone();
        let Some((tail, _)) = self.trailing() else {
            return Ok(quotient);
        };
        // The lowest term of an exact quotient is tail(self)/tail(divisor).
        let dtail = divisor.trailing().expect("nonzero divisor").0;
        let floor: Exponent = tail.iter().zip(dtail).map(|(a, b)| a - b).collect();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let q_e: Exponent = e.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if q_e < floor || !(&c % &dlead_c).is_zero() {
                return Err(Error::Input("Laurent division is not exact".into()));
            }
            let q_c = &c / &dlead_c;
            rem = &rem - &divisor.shift(&q_e).scale(&q_c);
            quotient.add_term(q_e, q_c);
        }
        Ok(quotient)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentCharacter {
    type Output = LaurentCharacter;
    fn add(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentCharacter {
    type Output = LaurentCharacter;
    fn sub(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentCharacter {
    type Output = LaurentCharacter;
    fn neg(self) -> LaurentCharacter {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &LaurentCharacter {
    type Output = LaurentCharacter;
    fn mul(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentCharacter { rank: self.rank, terms: acc }
    }
}

/// Character of an external tensor product: exponent vectors are concatenated.
pub fn outer_product(a: &LaurentCharacter, b: &LaurentCharacter) -> LaurentCharacter {
    let mut out = LaurentCharacter::zero(a.rank + b.rank);
    for (e1, c1) in &a.terms {
        for (e2, c2) in &b.terms {
            let mut e = e1.clone();
            e.extend_from_slice(e2);
            out.add_term(e, c1 * c2);
        }
    }
    out
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if k > 0 {
                write!(f, " ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                write!(f, "{}", mono.join(""))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(rank: usize, terms: &[(&[i64], i64)]) -> LaurentCharacter {
        let mut c = LaurentCharacter::zero(rank);
        for (e, k) in terms {
            c.add_term(e.to_vec(), BigInt::from(*k));
        }
        c
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = ch(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = ch(2, &[(&[1, 0], 1)]);
        let d = &a - &b;
        assert_eq!(d, ch(2, &[(&[0, 1], 1)]));
        assert!((&d - &d).is_zero());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = ch(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let b = ch(2, &[(&[2, -1], 1), (&[0, 0], 3), (&[-1, 1], 2)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_fails() {
        let a = ch(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let b = ch(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        assert!(b.div_exact(&a).is_err());
    }

    #[test]
    fn display() {
        let a = ch(2, &[(&[1, 0], 1), (&[0, -1], 2), (&[0, 0], -1)]);
        assert_eq!(a.to_string(), "x1 - 1 + 2x2^-1");
    }
}
