use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::group::{Permutation, PermutationGroup};
use crate::error::{Error, Result};

/// Largest degree of the center over the rationals that the tool accepts.
pub const MAX_CENTER_DEGREE: usize = 8;

/// Brauer class information about the simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrauerTag {
    Split,
    QuaternionIndefinite,
    QuaternionDefinite,
    Unspecified,
}

/// Type of the center with its positive involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionTag {
    TotallyReal,
    Cm,
    Other,
}

impl BrauerTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BrauerTag::Split => "split",
            BrauerTag::QuaternionIndefinite => "quaternion-indefinite",
            BrauerTag::QuaternionDefinite => "quaternion-definite",
            BrauerTag::Unspecified => "unspecified",
        }
    }
}

impl InvolutionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionTag::TotallyReal => "totally-real",
            InvolutionTag::Cm => "cm",
            InvolutionTag::Other => "other",
        }
    }
}

/// Quaternion algebra (a, b) over the rationals: i² = a, j² = b, ij = −ji.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuaternionParams {
    pub a: i64,
    pub b: i64,
}

/// One simple factor D of the endomorphism algebra, described by the degree
/// `n` of its center K, its index `d`, and the Galois action on Σ(K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFactorDescriptor {
    pub n: usize,
    pub d: usize,
    pub galois_generators: Vec<Permutation>,
    pub brauer: BrauerTag,
    pub involution: InvolutionTag,
    /// Complex conjugation on Σ(K), only meaningful for CM centers.
    pub conjugation: Option<Permutation>,
    /// Structure constants for the quaternion realization preset.
    pub quaternion: Option<QuaternionParams>,
    /// `m` in K = Q(√m) for the real quadratic realization preset.
    pub real_quadratic: Option<i64>,
    /// User-supplied values of d(λ), keyed by λ.
    pub d_lambda_overrides: BTreeMap<Vec<i64>, u32>,
}

impl SimpleFactorDescriptor {
    pub fn new(
        n: usize,
        d: usize,
        galois_generators: Vec<Permutation>,
        brauer: BrauerTag,
        involution: InvolutionTag,
    ) -> Self {
        SimpleFactorDescriptor {
            n,
            d,
            galois_generators,
            brauer,
            involution,
            conjugation: None,
            quaternion: None,
            real_quadratic: None,
            d_lambda_overrides: BTreeMap::new(),
        }
    }

    /// D = Q.
    pub fn rational() -> Self {
        Self::new(1, 1, Vec::new(), BrauerTag::Split, InvolutionTag::TotallyReal)
    }

    /// Indefinite quaternion algebra over Q.
    pub fn quaternion_indefinite() -> Self {
        Self::new(
            1,
            2,
            Vec::new(),
            BrauerTag::QuaternionIndefinite,
            InvolutionTag::TotallyReal,
        )
    }

    /// Totally real field of degree `n` with the given Galois action.
    pub fn totally_real(n: usize, galois_generators: Vec<Permutation>) -> Self {
        Self::new(n, 1, galois_generators, BrauerTag::Split, InvolutionTag::TotallyReal)
    }

    /// Totally real field of degree `n` whose Galois closure has group S_n.
    pub fn totally_real_symmetric(n: usize) -> Self {
        Self::totally_real(n, PermutationGroup::symmetric_generators(n))
    }

    /// The group generated by the Galois generators, after validating them.
    pub fn galois_group(&self) -> Result<PermutationGroup> {
        if self.n == 0 || self.d == 0 {
            return Err(Error::Descriptor("n and d must be positive".into()));
        }
        if self.n > MAX_CENTER_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "center degree n = {} exceeds the cap {}",
                self.n, MAX_CENTER_DEGREE
            )));
        }
        let group = PermutationGroup::new(self.n, self.galois_generators.clone())?;
        if !group.is_transitive() {
            return Err(Error::Descriptor(format!(
                "Galois action on {} embeddings is not transitive",
                self.n
            )));
        }
        Ok(group)
    }

    /// The integer 2g/(nd) bounding admissible weights.
    pub fn box_bound(&self, g: u32) -> Result<i64> {
        let nd = (self.n * self.d) as i64;
        let two_g = 2 * g as i64;
        if nd == 0 || two_g % nd != 0 {
            return Err(Error::Descriptor(format!(
                "n·d = {} does not divide 2g = {}",
                nd, two_g
            )));
        }
        Ok(two_g / nd)
    }

    pub fn validate(&self, g: u32) -> Result<()> {
        self.galois_group()?;
        self.box_bound(g)?;
        if let Some(conj) = &self.conjugation {
            PermutationGroup::check_permutation(self.n, conj)?;
        }
        if matches!(self.brauer, BrauerTag::QuaternionIndefinite | BrauerTag::QuaternionDefinite) && self.d != 2 {
            return Err(Error::Descriptor(format!(
                "a quaternion algebra has index 2, got d = {}",
                self.d
            )));
        }
        if let Some(q) = self.quaternion {
            if q.a == 0 || q.b == 0 {
                return Err(Error::Descriptor("quaternion parameters must be nonzero".into()));
            }
        }
        if let Some(m) = self.real_quadratic {
            if m <= 1 || is_square(m) {
                return Err(Error::Descriptor(format!(
                    "real quadratic parameter m = {m} must be a positive non-square"
                )));
            }
        }
        for (lambda, &v) in &self.d_lambda_overrides {
            if lambda.len() != self.d || v == 0 || !(self.d as u32).is_multiple_of(v) {
                return Err(Error::Descriptor(format!(
                    "d(λ) override {v} for {lambda:?} must divide d = {}",
                    self.d
                )));
            }
        }
        Ok(())
    }
}

fn is_square(m: i64) -> bool {
    if m < 0 {
        return false;
    }
    let r = (m as f64).sqrt().round() as i64;
    (r - 1..=r + 1).any(|s| s >= 0 && s * s == m)
}

/// A simple factor together with the relative dimension it accounts for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBlock {
    pub factor: SimpleFactorDescriptor,
    pub g: u32,
}

/// Relative dimension `g` and the simple factors of the endomorphism algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianDescriptor {
    pub g: u32,
    pub factors: Vec<FactorBlock>,
}

impl AbelianDescriptor {
    pub fn new(g: u32, factors: Vec<FactorBlock>) -> Result<Self> {
        let desc = AbelianDescriptor { g, factors };
        desc.validate()?;
        Ok(desc)
    }

    /// Single simple factor carrying the whole dimension.
    pub fn simple(factor: SimpleFactorDescriptor, g: u32) -> Result<Self> {
        Self::new(g, vec![FactorBlock { factor, g }])
    }

    pub fn validate(&self) -> Result<()> {
        if self.g == 0 {
            return Err(Error::Descriptor("g must be positive".into()));
        }
        if self.factors.is_empty() {
            return Err(Error::Descriptor("at least one simple factor is required".into()));
        }
        let total: u32 = self.factors.iter().map(|b| b.g).sum();
        if total != self.g {
            return Err(Error::Descriptor(format!(
                "per-factor dimensions sum to {total}, expected g = {}",
                self.g
            )));
        }
        for (j, block) in self.factors.iter().enumerate() {
            if block.g == 0 {
                return Err(Error::Descriptor(format!("factor {j} has dimension 0")));
            }
            block
                .factor
                .validate(block.g)
                .map_err(|e| match e {
                    Error::Descriptor(msg) => Error::Descriptor(format!("factor {j}: {msg}")),
                    other => other,
                })?;
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// The only factor of a simple descriptor.
    pub fn single(&self) -> Result<&FactorBlock> {
        match self.factors.as_slice() {
            [only] => Ok(only),
            _ => Err(Error::Unsupported(format!(
                "endomorphism algebra with {} simple factors; only simple algebras are handled here",
                self.factors.len()
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_is_enforced() {
        let q = SimpleFactorDescriptor::totally_real_symmetric(3);
        assert!(matches!(q.box_bound(1), Err(Error::Descriptor(_))));
        assert_eq!(q.box_bound(3).unwrap(), 2);
    }

    #[test]
    fn dimensions_must_add_up() {
        let blocks = vec![
            FactorBlock { factor: SimpleFactorDescriptor::rational(), g: 1 },
            FactorBlock { factor: SimpleFactorDescriptor::rational(), g: 1 },
        ];
        assert!(AbelianDescriptor::new(3, blocks.clone()).is_err());
        assert!(AbelianDescriptor::new(2, blocks).is_ok());
    }

    #[test]
    fn non_transitive_action_is_rejected() {
        let f = SimpleFactorDescriptor::totally_real(2, vec![]);
        assert!(matches!(f.validate(2), Err(Error::Descriptor(_))));
    }

    #[test]
    fn center_degree_cap() {
        let f = SimpleFactorDescriptor::totally_real_symmetric(9);
        assert!(matches!(f.galois_group(), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn squares_are_not_real_quadratic() {
        let mut f = SimpleFactorDescriptor::totally_real_symmetric(2);
        f.real_quadratic = Some(4);
        assert!(f.validate(2).is_err());
        f.real_quadratic = Some(5);
        assert!(f.validate(2).is_ok());
    }
}
