//! Concrete models of D with its positive involution and of H₁ = D^k.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::linalg::{q, QMat, Q};
use crate::error::{Error, Result};
use crate::weight_lattice::{AbelianDescriptor, BrauerTag, InvolutionTag, QuaternionParams};

/// Largest relative dimension the exterior-algebra model accepts.
pub const MAX_REALIZATION_G: u32 = 6;

/// Default m for K = Q(√m) when the descriptor does not give one.
pub const DEFAULT_REAL_QUADRATIC: i64 = 5;

/// Default (a, b) for the quaternion preset. (−1, 3) ramifies at 2 and 3.
pub const DEFAULT_QUATERNION: QuaternionParams = QuaternionParams { a: -1, b: 3 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum PresetKind {
    Rationals,
    RealQuadratic { m: i64 },
    Quaternion { a: i64, b: i64 },
}

impl PresetKind {
    pub fn name(&self) -> String {
        match self {
            PresetKind::Rationals => "Q".into(),
            PresetKind::RealQuadratic { m } => format!("Q(√{m})"),
            PresetKind::Quaternion { a, b } => format!("({a},{b})_Q"),
        }
    }
}

/// D on a rational basis, the involution †, and a †-compatible symplectic
/// form on H₁ = D^k.
#[derive(Debug, Clone)]
pub struct AlgebraPreset {
    pub kind: PresetKind,
    pub g: u32,
    /// Rank of H₁ as a D-module.
    pub k: usize,
    pub basis_names: Vec<String>,
    /// e_i e_j = Σ_l structure[i][j][l] e_l.
    structure: Vec<Vec<Vec<Q>>>,
    /// Column j holds e_j†.
    pub dagger: QMat,
    /// Gram matrix of E₀ on the rational basis of H₁.
    pub form: QMat,
    /// Coordinates of a basis of D^sym = {c : c† = c}.
    pub dsym: Vec<Vec<Q>>,
}

impl AlgebraPreset {
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn two_g(&self) -> usize {
        2 * self.g as usize
    }

    pub fn unit(&self) -> Vec<Q> {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let r = self.dim();
        let mut out = vec![Q::zero(); r];
        for (xi, row) in x.iter().zip(&self.structure) {
            if xi.is_zero() {
                continue;
            }
            for (yj, consts) in y.iter().zip(row) {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, k) in out.iter_mut().zip(consts) {
                    if !k.is_zero() {
                        *o += &c * k;
                    }
                }
            }
        }
        out
    }

    pub fn dagger_of(&self, x: &[Q]) -> Vec<Q> {
        self.dagger.mul_vec(x)
    }

    /// Matrix of left multiplication by x on D.
    pub fn left_regular(&self, x: &[Q]) -> QMat {
        let r = self.dim();
        let mut m = QMat::zeros(r, r);
        for j in 0..r {
            let col = self.mul(x, &self.basis(j));
            for i in 0..r {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    /// Action of x on H₁ = D^k.
    pub fn action(&self, x: &[Q]) -> QMat {
        self.left_regular(x).block_diagonal(self.k)
    }

    /// Trace of x acting on the 2g-dimensional H₁.
    pub fn trace_v(&self, x: &[Q]) -> Q {
        self.action(x).trace()
    }

    /// Inverse of x in D, when it exists.
    pub fn inverse(&self, x: &[Q]) -> Option<Vec<Q>> {
        self.left_regular(x).solve(&self.unit())
    }

    /// Expresses a †-symmetric element in the D^sym basis.
    pub fn dsym_coordinates(&self, x: &[Q]) -> Option<Vec<Q>> {
        let cols = self.dsym.len();
        let mut m = QMat::zeros(self.dim(), cols);
        for (j, v) in self.dsym.iter().enumerate() {
            for i in 0..self.dim() {
                m[(i, j)] = v[i].clone();
            }
        }
        m.solve(x)
    }

    pub fn element_name(&self, x: &[Q]) -> String {
        let parts: Vec<String> = x
            .iter()
            .zip(&self.basis_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if n == "1" { c.to_string() } else if c.is_one() { n.clone() } else { format!("{c}{n}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Dimension of g = g₀ ⊕ g₂ ⊕ g₋₂ with g₀ = D and g₂ ≅ D^sym.
    pub fn lie_dimension(&self) -> usize {
        self.dim() + 2 * self.dsym.len()
    }

    /// Checks E₀ antisymmetric, invertible and compatible with every basis element.
    pub fn check_invariants(&self) -> Result<()> {
        let bug = |m: String| Err(Error::Verification(format!("realization construction: {m}")));
        if self.dim() * self.k != self.two_g() {
            return bug(format!("dim D · k = {} ≠ 2g = {}", self.dim() * self.k, self.two_g()));
        }
        if !(&self.form + &self.form.transpose()).is_zero() {
            return bug("base form is not antisymmetric".into());
        }
        if !self.form.is_invertible() {
            return bug("base form is degenerate".into());
        }
        for i in 0..self.dim() {
            let e = self.basis(i);
            let lhs = &self.action(&e).transpose() * &self.form;
            let rhs = &self.form * &self.action(&self.dagger_of(&e));
            if lhs != rhs {
                return bug(format!("E₀(αx, y) ≠ E₀(x, α†y) for α = {}", self.basis_names[i]));
            }
        }
        for x in &self.dsym {
            if &self.dagger_of(x) != x {
                return bug("a D^sym basis vector is not †-fixed".into());
            }
        }
        Ok(())
    }
}

fn structure_table(kind: PresetKind) -> (Vec<String>, Vec<Vec<Vec<Q>>>, QMat) {
    match kind {
        PresetKind::Rationals => (vec!["1".into()], vec![vec![vec![q(1)]]], QMat::identity(1)),
        PresetKind::RealQuadratic { m } => {
            let e = |a: i64, b: i64| vec![q(a), q(b)];
            (
                vec!["1".into(), "s".into()],
                vec![vec![e(1, 0), e(0, 1)], vec![e(0, 1), e(m, 0)]],
                QMat::identity(2),
            )
        }
        PresetKind::Quaternion { a, b } => {
            let e = |c: [i64; 4]| c.iter().map(|&x| q(x)).collect::<Vec<Q>>();
            let one = e([1, 0, 0, 0]);
            let i = e([0, 1, 0, 0]);
            let j = e([0, 0, 1, 0]);
            let k = e([0, 0, 0, 1]);
            let table = vec![
                vec![one.clone(), i.clone(), j.clone(), k.clone()],
                vec![i, e([a, 0, 0, 0]), k.clone(), e([0, 0, a, 0])],
                vec![j, e([0, 0, 0, -1]), e([b, 0, 0, 0]), e([0, -b, 0, 0])],
                vec![k, e([0, 0, -a, 0]), e([0, b, 0, 0]), e([-a * b, 0, 0, 0])],
            ];
            let mut dagger = QMat::identity(4);
            dagger[(1, 1)] = q(-1);
            (vec!["1".into(), "i".into(), "j".into(), "k".into()], table, dagger)
        }
    }
}

fn standard_symplectic(two_g: usize) -> QMat {
    let mut j = QMat::zeros(two_g, two_g);
    for p in 0..two_g / 2 {
        j[(2 * p, 2 * p + 1)] = q(1);
        j[(2 * p + 1, 2 * p)] = q(-1);
    }
    j
}

fn clear_denominators(v: &[Q]) -> Vec<Q> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x * Q::from_integer(l.clone())).collect()
}

/// Solves for alternating forms with E(αx, y) = E(x, α†y) and takes the first
/// nondegenerate one in a fixed search order.
fn solve_form(
    two_g: usize,
    actions: &[(QMat, QMat)],
) -> Result<QMat> {
    let pairs: Vec<(usize, usize)> = (0..two_g).flat_map(|p| (p + 1..two_g).map(move |q| (p, q))).collect();
    let unknowns = pairs.len();
    let to_matrix = |x: &[Q]| {
        let mut m = QMat::zeros(two_g, two_g);
        for (t, &(p, qq)) in pairs.iter().enumerate() {
            m[(p, qq)] = x[t].clone();
            m[(qq, p)] = -x[t].clone();
        }
        m
    };
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (a, a_dag) in actions {
        // A^T J − J A† = 0, linear in the entries of J
        let columns: Vec<QMat> = (0..unknowns)
            .map(|t| {
                let mut x = vec![Q::zero(); unknowns];
                x[t] = Q::one();
                let jm = to_matrix(&x);
                &(&a.transpose() * &jm) - &(&jm * a_dag)
            })
            .collect();
        for r in 0..two_g {
            for c in 0..two_g {
                rows.push(columns.iter().map(|m| m[(r, c)].clone()).collect());
            }
        }
    }
    let basis = QMat::from_rows(rows).nullspace();
    if basis.is_empty() {
        return Err(Error::Verification("no compatible alternating form exists".into()));
    }
    for v in &basis {
        let m = to_matrix(&clear_denominators(v));
        if m.is_invertible() {
            return Ok(m);
        }
    }
    for t in 2..=(8 * basis.len() as i64) {
        let mut x = vec![Q::zero(); unknowns];
        let mut w = q(1);
        for v in &basis {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &w * vi;
            }
            w *= q(t);
        }
        let m = to_matrix(&clear_denominators(&x));
        if m.is_invertible() {
            return Ok(m);
        }
    }
    Err(Error::Verification("every compatible alternating form tried is degenerate".into()))
}

pub fn preset_kind(desc: &AbelianDescriptor) -> Result<PresetKind> {
    desc.validate()?;
    let block = desc.single()?;
    let f = &block.factor;
    match (f.n, f.d, f.brauer, f.involution) {
        (1, 1, _, _) => Ok(PresetKind::Rationals),
        (2, 1, _, InvolutionTag::TotallyReal) => {
            let m = f.real_quadratic.unwrap_or(DEFAULT_REAL_QUADRATIC);
            let root = (m as f64).sqrt().round() as i64;
            if m <= 1 || root * root == m {
                return Err(Error::Descriptor(format!("Q(√{m}) is not a real quadratic field")));
            }
            Ok(PresetKind::RealQuadratic { m })
        }
        (1, 2, BrauerTag::QuaternionIndefinite, _) => {
            let p = f.quaternion.unwrap_or(DEFAULT_QUATERNION);
            if p.a == 0 || p.b == 0 {
                return Err(Error::Descriptor("quaternion parameters must be nonzero".into()));
            }
            Ok(PresetKind::Quaternion { a: p.a, b: p.b })
        }
        _ => Err(Error::Unsupported(
            "the exterior-algebra model has presets only for D = Q, real quadratic fields and indefinite quaternion algebras over Q".into(),
        )),
    }
}

pub fn build_realization(desc: &AbelianDescriptor) -> Result<AlgebraPreset> {
    let kind = preset_kind(desc)?;
    preset_for(kind, desc.g)
}

pub fn preset_for(kind: PresetKind, g: u32) -> Result<AlgebraPreset> {
    if g == 0 || g > MAX_REALIZATION_G {
        return Err(Error::ResourceLimit(format!(
            "the exterior-algebra model supports 1 ≤ g ≤ {MAX_REALIZATION_G}, got {g}"
        )));
    }
    let (basis_names, structure, dagger) = structure_table(kind);
    let r = basis_names.len();
    let two_g = 2 * g as usize;
    if !two_g.is_multiple_of(r) {
        return Err(Error::Descriptor(format!("dim D = {r} must divide 2g = {two_g}")));
    }
    let mut preset = AlgebraPreset {
        kind,
        g,
        k: two_g / r,
        basis_names,
        structure,
        dagger,
        form: QMat::zeros(two_g, two_g),
        dsym: Vec::new(),
    };
    let fix = &preset.dagger - &QMat::identity(r);
    preset.dsym = fix.nullspace();
    preset.form = match kind {
        PresetKind::Rationals => standard_symplectic(two_g),
        _ => {
            let actions: Vec<(QMat, QMat)> = (0..r)
                .map(|i| {
                    let e = preset.basis(i);
                    (preset.action(&e), preset.action(&preset.dagger_of(&e)))
                })
                .collect();
            solve_form(two_g, &actions)?
        }
    };
    preset.check_invariants()?;
    Ok(preset)
}
