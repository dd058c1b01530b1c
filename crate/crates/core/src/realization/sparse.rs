//! Sparse operators on ΛW for a space W with basis w_0, …, w_{N−1}.
//!
//! A basis vector of ΛW is a bitmask S standing for the wedge of the w_p with
//! p ∈ S in increasing order. Operators keep integer numerators over one
//! positive denominator; all arithmetic is checked, so an overflow is an error
//! and never a wrong answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::linalg::Q;
use crate::error::{Error, Result};

pub type Mask = u32;

pub fn degree(mask: Mask) -> u32 {
    mask.count_ones()
}

/// Masks of the given degree among `n` generators, increasing.
pub fn masks_of_degree(n: usize, deg: u32) -> Vec<Mask> {
    (0..1u32 << n).filter(|&m| degree(m) == deg).collect()
}

fn below(mask: Mask, p: usize) -> u32 {
    (mask & ((1u32 << p) - 1)).count_ones()
}

fn sign(parity: u32) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// w_p ∧ e_S.
pub fn wedge(p: usize, mask: Mask) -> Option<(i64, Mask)> {
    if mask & (1 << p) != 0 {
        None
    } else {
        Some((sign(below(mask, p)), mask | (1 << p)))
    }
}

/// Interior product of e_S with the basis vector dual to w_p.
pub fn contract(p: usize, mask: Mask) -> Option<(i64, Mask)> {
    if mask & (1 << p) == 0 {
        None
    } else {
        Some((sign(below(mask, p)), mask & !(1 << p)))
    }
}

fn overflow() -> Error {
    Error::ResourceLimit("integer overflow in exterior-algebra operator arithmetic".into())
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(overflow)
}

/// Exact sparse square matrix: numerators column by column over `den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtOp {
    dim: usize,
    /// Column j: (row, numerator) sorted by row, no zeros.
    cols: Vec<Vec<(Mask, i128)>>,
    den: i128,
}

impl ExtOp {
    pub fn zero(dim: usize) -> Self {
        ExtOp { dim, cols: vec![Vec::new(); dim], den: 1 }
    }

    pub fn from_columns(dim: usize, cols: Vec<BTreeMap<Mask, Q>>) -> Result<Self> {
        let l = cols
            .iter()
            .flat_map(|c| c.values())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let den = to_i128(&l)?;
        let mut out = Vec::with_capacity(dim);
        for c in cols {
            let mut col = Vec::with_capacity(c.len());
            for (row, v) in c {
                if v.is_zero() {
                    continue;
                }
                let num = v.numer() * (&l / v.denom());
                col.push((row, to_i128(&num)?));
            }
            out.push(col);
        }
        Ok(ExtOp { dim, cols: out, den }.reduced())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, row: Mask, col: Mask) -> Q {
        self.cols[col as usize]
            .binary_search_by_key(&row, |&(r, _)| r)
            .map(|i| Q::new(BigInt::from(self.cols[col as usize][i].1), BigInt::from(self.den)))
            .unwrap_or_else(|_| Q::zero())
    }

    /// Column j as exact rationals.
    pub fn column(&self, col: Mask) -> Vec<(Mask, Q)> {
        self.cols[col as usize]
            .iter()
            .map(|&(r, v)| (r, Q::new(BigInt::from(v), BigInt::from(self.den))))
            .collect()
    }

    /// Positions of the nonzero entries as (column, row), in column-major order.
    pub fn support(&self) -> impl Iterator<Item = (Mask, Mask)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, _)| (c as Mask, r)))
    }

    fn reduced(mut self) -> Self {
        let mut g = self.den;
        for col in &self.cols {
            for &(_, v) in col {
                g = g.gcd(&v);
                if g == 1 {
                    return self;
                }
            }
        }
        if g > 1 {
            self.den /= g;
            for col in &mut self.cols {
                for e in col.iter_mut() {
                    e.1 /= g;
                }
            }
        }
        self
    }

    pub fn mul(&self, rhs: &ExtOp) -> Result<ExtOp> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let den = self.den.checked_mul(rhs.den).ok_or_else(overflow)?;
        let mut acc = vec![0i128; self.dim];
        let mut touched: Vec<Mask> = Vec::new();
        let mut cols = Vec::with_capacity(self.dim);
        for rcol in &rhs.cols {
            for &(k, b) in rcol {
                for &(i, a) in &self.cols[k as usize] {
                    let slot = &mut acc[i as usize];
                    if *slot == 0 {
                        touched.push(i);
                    }
                    let p = a.checked_mul(b).ok_or_else(overflow)?;
                    *slot = slot.checked_add(p).ok_or_else(overflow)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut col = Vec::with_capacity(touched.len());
            for &i in &touched {
                let v = std::mem::take(&mut acc[i as usize]);
                if v != 0 {
                    col.push((i, v));
                }
            }
            touched.clear();
            cols.push(col);
        }
        Ok(ExtOp { dim: self.dim, cols, den }.reduced())
    }

    /// Σ t_k · X_k with rational coefficients.
    pub fn linear_combination(dim: usize, terms: &[(Q, &ExtOp)]) -> Result<ExtOp> {
        let mut l = BigInt::one();
        for (t, x) in terms {
            if !t.is_zero() {
                l = l.lcm(&(t.denom() * BigInt::from(x.den)));
            }
        }
        let den = to_i128(&l)?;
        let mut maps: Vec<BTreeMap<Mask, i128>> = vec![BTreeMap::new(); dim];
        for (t, x) in terms {
            if t.is_zero() {
                continue;
            }
            let factor = to_i128(&(t.numer() * (&l / (t.denom() * BigInt::from(x.den)))))?;
            for (c, col) in x.cols.iter().enumerate() {
                for &(r, v) in col {
                    let p = v.checked_mul(factor).ok_or_else(overflow)?;
                    let slot = maps[c].entry(r).or_insert(0);
                    *slot = slot.checked_add(p).ok_or_else(overflow)?;
                }
            }
        }
        let cols = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect())
            .collect();
        Ok(ExtOp { dim, cols, den }.reduced())
    }

    pub fn sub(&self, rhs: &ExtOp) -> Result<ExtOp> {
        Self::linear_combination(self.dim, &[(Q::one(), self), (-Q::one(), rhs)])
    }

    /// self·rhs − rhs·self.
    pub fn commutator(&self, rhs: &ExtOp) -> Result<ExtOp> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// Largest absolute value of an entry.
    pub fn max_abs(&self) -> Q {
        let m = self
            .cols
            .iter()
            .flat_map(|c| c.iter().map(|&(_, v)| v.unsigned_abs()))
            .max()
            .unwrap_or(0);
        Q::new(BigInt::from(m), BigInt::from(self.den))
    }

    /// The block mapping degree `from` to degree `to`, as a dense rational matrix.
    pub fn block(&self, generators: usize, from: u32, to: u32) -> super::linalg::QMat {
        let rows = masks_of_degree(generators, to);
        let cols = masks_of_degree(generators, from);
        let index: BTreeMap<Mask, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut out = super::linalg::QMat::zeros(rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for (r, v) in self.column(c) {
                if let Some(&i) = index.get(&r) {
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    /// Whether every column is supported in degree deg(column) + shift.
    pub fn shifts_degree_by(&self, shift: i32) -> bool {
        self.cols.iter().enumerate().all(|(c, col)| {
            col.iter().all(|&(r, _)| degree(r) as i32 == degree(c as Mask) as i32 + shift)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::linalg::q;

    fn op(dim: usize, entries: &[(Mask, Mask, i64)]) -> ExtOp {
        let mut cols = vec![BTreeMap::new(); dim];
        for &(r, c, v) in entries {
            cols[c as usize].insert(r, q(v));
        }
        ExtOp::from_columns(dim, cols).unwrap()
    }

    #[test]
    fn wedge_and_contract_signs() {
        // w_0 ∧ (w_1) = e_{01}, w_1 ∧ (w_0) = −e_{01}
        assert_eq!(wedge(0, 0b10), Some((1, 0b11)));
        assert_eq!(wedge(1, 0b01), Some((-1, 0b11)));
        assert_eq!(wedge(1, 0b10), None);
        assert_eq!(contract(1, 0b11), Some((-1, 0b01)));
        assert_eq!(contract(0, 0b11), Some((1, 0b10)));
    }

    #[test]
    fn products_and_commutators() {
        let a = op(2, &[(1, 0, 1)]);
        let b = op(2, &[(0, 1, 1)]);
        let c = a.commutator(&b).unwrap();
        assert_eq!(c, op(2, &[(1, 1, 1), (0, 0, -1)]));
        assert!(a.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn rational_coefficients() {
        let a = op(2, &[(0, 0, 1), (1, 1, 3)]);
        let half = Q::new(BigInt::from(1), BigInt::from(2));
        let x = ExtOp::linear_combination(2, &[(half, &a)]).unwrap();
        assert_eq!(x.entry(1, 1), Q::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(x.max_abs(), Q::new(BigInt::from(3), BigInt::from(2)));
        let back = ExtOp::linear_combination(2, &[(q(2), &x)]).unwrap();
        assert_eq!(back, a);
    }
}
