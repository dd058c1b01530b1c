use std::fmt;

use serde::{Deserialize, Serialize};

use super::descriptor::SimpleFactorDescriptor;
use super::group::Permutation;
use crate::error::{Error, Result};

/// A dominant weight (λ₁ ≥ … ≥ λ_d) of GL_d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightTuple(Vec<i64>);

impl WeightTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(WeightTuple(entries))
    }

    pub fn zero(d: usize) -> Self {
        WeightTuple(vec![0; d])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ| = Σ λ_i.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// (bound − λ_d, …, bound − λ₁).
    pub fn reflect(&self, bound: i64) -> WeightTuple {
        WeightTuple(self.0.iter().rev().map(|&x| bound - x).collect())
    }

    /// (−λ_d, …, −λ₁).
    pub fn check(&self) -> WeightTuple {
        self.reflect(0)
    }

    pub fn shift(&self, q: i64) -> WeightTuple {
        WeightTuple(self.0.iter().map(|&x| x + q).collect())
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A dominant tuple with entries in q + Z for a half-integer q, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfWeightTuple {
    doubled: Vec<i64>,
}

impl HalfWeightTuple {
    pub fn from_doubled(doubled: Vec<i64>) -> Result<Self> {
        if doubled.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("doubled tuple {doubled:?} is not weakly decreasing")));
        }
        if doubled.windows(2).any(|w| (w[0] - w[1]) % 2 != 0) {
            return Err(Error::Input(format!(
                "doubled tuple {doubled:?} has entries in different cosets of Z"
            )));
        }
        Ok(HalfWeightTuple { doubled })
    }

    pub fn from_integral(t: &WeightTuple) -> Self {
        HalfWeightTuple { doubled: t.entries().iter().map(|x| 2 * x).collect() }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }
}

impl fmt::Display for HalfWeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if x % 2 == 0 {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{x}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// A function Σ(K) → Λ⁺, one weight tuple per embedding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiWeight(Vec<WeightTuple>);

impl MultiWeight {
    pub fn new(per_sigma: Vec<WeightTuple>) -> Result<Self> {
        if let Some(first) = per_sigma.first() {
            if per_sigma.iter().any(|t| t.len() != first.len()) {
                return Err(Error::Input("weight tuples of different lengths".into()));
            }
        }
        Ok(MultiWeight(per_sigma))
    }

    /// Builds from raw rows, checking dominance of every row.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let tuples = rows.into_iter().map(WeightTuple::new).collect::<Result<Vec<_>>>()?;
        Self::new(tuples)
    }

    pub fn zero(n: usize, d: usize) -> Self {
        MultiWeight(vec![WeightTuple::zero(d); n])
    }

    pub fn per_sigma(&self) -> &[WeightTuple] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn d(&self) -> usize {
        self.0.first().map_or(0, |t| t.len())
    }

    pub fn permuted(&self, p: &[usize]) -> MultiWeight {
        MultiWeight(super::group::PermutationGroup::act(p, &self.0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(WeightTuple::is_polynomial)
    }

    fn check_shape(&self, factor: &SimpleFactorDescriptor) -> Result<()> {
        if self.n() != factor.n || self.0.iter().any(|t| t.len() != factor.d) {
            return Err(Error::Input(format!(
                "multi-weight {self} does not have shape n = {}, d = {}",
                factor.n, factor.d
            )));
        }
        Ok(())
    }
}

impl fmt::Display for MultiWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if t.len() == 1 {
                write!(f, "{}", t.entries()[0])?;
            } else {
                write!(f, "{t}")?;
            }
        }
        write!(f, "]")
    }
}

/// Where a multi-weight sits in the chain X⁺ ⊃ X^pol ⊃ X^adm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightClass {
    NotPol,
    PolNotAdm,
    Adm,
}

/// wt(λ) = Σ_σ |λ(σ)|, defined on polynomial weights only.
pub fn weight_of(blambda: &MultiWeight) -> Result<u64> {
    if !blambda.is_polynomial() {
        return Err(Error::Input(format!(
            "wt is only defined on polynomial weights, got {blambda}"
        )));
    }
    Ok(blambda.0.iter().map(|t| t.size() as u64).sum())
}

/// Componentwise λ ↦ λ^∨ = (2g/nd − λ_d, …, 2g/nd − λ₁).
pub fn dual_wdual(
    blambda: &MultiWeight,
    factor: &SimpleFactorDescriptor,
    g: u32,
) -> Result<MultiWeight> {
    let bound = factor.box_bound(g)?;
    blambda.check_shape(factor)?;
    Ok(MultiWeight(blambda.0.iter().map(|t| t.reflect(bound)).collect()))
}

/// Which identification of the center of the dual algebra to use for duals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualityConvention {
    /// Through f ↦ f^∨.
    #[default]
    DualScheme,
    /// Through a polarization, which conjugates a CM center.
    Polarization,
}

/// The dual under the chosen convention. The polarization convention composes
/// with complex conjugation on Σ(K) and needs a CM factor with a conjugation.
pub fn dual_with_convention(
    blambda: &MultiWeight,
    factor: &SimpleFactorDescriptor,
    g: u32,
    convention: DualityConvention,
) -> Result<MultiWeight> {
    let dual = dual_wdual(blambda, factor, g)?;
    match convention {
        DualityConvention::DualScheme => Ok(dual),
        DualityConvention::Polarization => {
            let conj = conjugation_of(factor)?;
            Ok(dual.permuted(conj))
        }
    }
}

fn conjugation_of(factor: &SimpleFactorDescriptor) -> Result<&Permutation> {
    if factor.involution != super::descriptor::InvolutionTag::Cm {
        return Err(Error::Input(
            "the conjugated duality convention needs a CM center".into(),
        ));
    }
    factor
        .conjugation
        .as_ref()
        .ok_or_else(|| Error::Input("CM factor without a conjugation permutation".into()))
}

pub fn classify(blambda: &MultiWeight, factor: &SimpleFactorDescriptor, g: u32) -> Result<WeightClass> {
    let bound = factor.box_bound(g)?;
    blambda.check_shape(factor)?;
    if !blambda.is_polynomial() {
        return Ok(WeightClass::NotPol);
    }
    if blambda.0.iter().all(|t| t.entries().first().is_none_or(|&x| x <= bound)) {
        Ok(WeightClass::Adm)
    } else {
        Ok(WeightClass::PolNotAdm)
    }
}

/// Membership in Λ^Lef: g/nd ≥ μ₁ ≥ … ≥ μ_d ≥ −g/nd with μ_i ∈ g/nd + Z.
pub fn lefschetz_admissible(
    mu: &HalfWeightTuple,
    factor: &SimpleFactorDescriptor,
    g: u32,
) -> Result<bool> {
    // 2·(g/nd)
    let bound = factor.box_bound(g)?;
    if mu.doubled.len() != factor.d {
        return Err(Error::Input(format!("{mu} does not have length d = {}", factor.d)));
    }
    if let Some(x) = mu.doubled.iter().find(|&&x| (x - bound).rem_euclid(2) != 0) {
        return Err(Error::Input(format!(
            "entry {}/2 of {mu} is not in g/nd + Z (g/nd = {bound}/2)",
            x
        )));
    }
    Ok(mu.doubled.iter().all(|&x| -bound <= x && x <= bound))
}
