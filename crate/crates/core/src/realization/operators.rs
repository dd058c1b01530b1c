//! h_α, L_c and Λ_c on ΛH¹ with H¹ the dual of the 2g-dimensional H₁.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::AlgebraPreset;
use super::linalg::{q, QMat, Q};
use super::sparse::{contract, degree, wedge, ExtOp, Mask};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct OperatorSet {
    pub preset: AlgebraPreset,
    /// h_α for α running over the basis of D.
    pub h: Vec<ExtOp>,
    /// L_c for c running over the basis of D^sym.
    pub l: Vec<ExtOp>,
    /// Λ_c for c running over the basis of D^sym.
    pub lambda: Vec<ExtOp>,
    /// Scale of every Λ, fixed by Λ_1 L_1 1 = g·1.
    pub kappa: Q,
}

impl OperatorSet {
    pub fn generators(&self) -> usize {
        self.preset.two_g()
    }

    pub fn dim(&self) -> usize {
        1 << self.generators()
    }

    /// The top exterior power: all generators.
    pub fn volume(&self) -> Mask {
        ((1u64 << self.generators()) - 1) as Mask
    }
}

fn nonzero_entries(m: &QMat) -> Vec<(usize, usize, Q)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.push((i, j, m[(i, j)].clone()));
            }
        }
    }
    out
}

/// Derivation of ΛH¹ extending −A^T on H¹, plus trace(α)/2.
pub fn h_operator(preset: &AlgebraPreset, alpha: &[Q]) -> Result<ExtOp> {
    let n = preset.two_g();
    let a = preset.action(alpha);
    let half_trace = a.trace() / q(2);
    let entries = nonzero_entries(&a);
    let mut cols = Vec::with_capacity(1 << n);
    for s in 0..(1u32 << n) {
        let mut col: BTreeMap<Mask, Q> = BTreeMap::new();
        if !half_trace.is_zero() {
            col.insert(s, half_trace.clone());
        }
        // w_p ↦ −Σ_q A[p][q] w_q
        for (p, qq, v) in &entries {
            let Some((s1, rest)) = contract(*p, s) else { continue };
            let Some((s2, target)) = wedge(*qq, rest) else { continue };
            *col.entry(target).or_insert_with(Q::zero) -= v * q(s1 * s2);
        }
        col.retain(|_, v| !v.is_zero());
        cols.push(col);
    }
    ExtOp::from_columns(1 << n, cols)
}

/// Coefficients of the alternating matrix above the diagonal, checking antisymmetry.
fn upper_pairs(m: &QMat, what: &str) -> Result<Vec<(usize, usize, Q)>> {
    if !(m + &m.transpose()).is_zero() {
        return Err(Error::Verification(format!("{what} is not alternating")));
    }
    Ok(nonzero_entries(m).into_iter().filter(|(p, qq, _)| p < qq).collect())
}

/// Matrix of the 2-form E₀(cx, y).
pub fn two_form(preset: &AlgebraPreset, c: &[Q]) -> QMat {
    &preset.action(c).transpose() * &preset.form
}

/// Matrix of the bivector dual to E₀(cx, y) through E₀.
pub fn bivector(preset: &AlgebraPreset, c: &[Q]) -> Result<QMat> {
    let inv = preset
        .form
        .inverse()
        .ok_or_else(|| Error::Verification("base form is degenerate".into()))?;
    Ok(&preset.action(c) * &inv)
}

/// Wedge with the 2-form of c.
pub fn l_operator(preset: &AlgebraPreset, c: &[Q]) -> Result<ExtOp> {
    let n = preset.two_g();
    let pairs = upper_pairs(&two_form(preset, c), "the 2-form E_c")?;
    let mut cols = Vec::with_capacity(1 << n);
    for s in 0..(1u32 << n) {
        let mut col: BTreeMap<Mask, Q> = BTreeMap::new();
        for (p, qq, v) in &pairs {
            let Some((s1, t1)) = wedge(*qq, s) else { continue };
            let Some((s2, t2)) = wedge(*p, t1) else { continue };
            *col.entry(t2).or_insert_with(Q::zero) += v * q(s1 * s2);
        }
        col.retain(|_, v| !v.is_zero());
        cols.push(col);
    }
    ExtOp::from_columns(1 << n, cols)
}

/// Contraction with the bivector of c, times `scale`.
pub fn lambda_operator(preset: &AlgebraPreset, c: &[Q], scale: &Q) -> Result<ExtOp> {
    let n = preset.two_g();
    let pairs = upper_pairs(&bivector(preset, c)?, "the bivector of E_c")?;
    let mut cols = Vec::with_capacity(1 << n);
    for s in 0..(1u32 << n) {
        let mut col: BTreeMap<Mask, Q> = BTreeMap::new();
        for (p, qq, v) in &pairs {
            let Some((s1, t1)) = contract(*qq, s) else { continue };
            let Some((s2, t2)) = contract(*p, t1) else { continue };
            *col.entry(t2).or_insert_with(Q::zero) += v * scale * q(s1 * s2);
        }
        col.retain(|_, v| !v.is_zero());
        cols.push(col);
    }
    ExtOp::from_columns(1 << n, cols)
}

/// The normalization κ with κ·Λ'_1 L_1 1 = g, where Λ' is the unscaled contraction.
pub fn normalization(preset: &AlgebraPreset) -> Result<Q> {
    let one = preset.unit();
    let l = l_operator(preset, &one)?;
    let lam = lambda_operator(preset, &one, &Q::one())?;
    let image = lam.mul(&l)?.entry(0, 0);
    if image.is_zero() {
        return Err(Error::Verification("Λ_1 L_1 kills the unit class; no normalization exists".into()));
    }
    Ok(Q::from_integer(preset.g.into()) / image)
}

pub fn build_operators(preset: &AlgebraPreset) -> Result<OperatorSet> {
    let kappa = normalization(preset)?;
    let h = (0..preset.dim())
        .map(|i| h_operator(preset, &preset.basis(i)))
        .collect::<Result<Vec<_>>>()?;
    let l = preset.dsym.iter().map(|c| l_operator(preset, c)).collect::<Result<Vec<_>>>()?;
    let lambda = preset
        .dsym
        .iter()
        .map(|c| lambda_operator(preset, c, &kappa))
        .collect::<Result<Vec<_>>>()?;
    Ok(OperatorSet { preset: preset.clone(), h, l, lambda, kappa })
}

/// Checks h_1 = (g − i) on Λ^i.
pub fn identity_spectrum_ok(ops: &OperatorSet) -> bool {
    let h1 = &ops.h[0];
    let g = ops.preset.g as i64;
    (0..ops.dim() as Mask).all(|s| {
        let col = h1.column(s);
        col.len() <= 1 && {
            let expected = q(g - degree(s) as i64);
            match col.first() {
                Some((r, v)) => *r == s && *v == expected,
                None => expected.is_zero(),
            }
        }
    })
}
