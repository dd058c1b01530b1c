//! Graded character of ΛH¹ by direct enumeration of wedge monomials, and
//! its isotypic multiplicities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::char_engine::{decompose_blocks, LaurentCharacter, SpFourIrrepLabel};
use crate::error::{Error, Result};
use crate::lefschetz::{absolute_character, setup, FamilySetup, LefschetzFamily, LefschetzLabel};
use crate::motivic::ser_bigint;
use crate::weight_lattice::{orbit_of, AbelianDescriptor, MultiWeight, OrbitClass, ProductClass, WeightTuple};

/// Largest number of H¹ basis vectors enumerated.
pub const MAX_GENERATORS: usize = 16;

/// Torus weights of a basis of H¹ ⊗ Q̄: m copies of the standard weights for each embedding.
pub fn h1_weights(n: usize, d: usize, m: usize) -> Vec<Vec<i64>> {
    let rank = n * d;
    let mut out = Vec::with_capacity(rank * m);
    for sigma in 0..n {
        for _ in 0..m {
            for t in 0..d {
                let mut e = vec![0; rank];
                e[sigma * d + t] = 1;
                out.push(e);
            }
        }
    }
    out
}

/// Character of Λ^i H¹ for i = 0, …, 2g, one monomial per subset of the weight basis.
pub fn graded_character(weights: &[Vec<i64>]) -> Result<Vec<LaurentCharacter>> {
    let n = weights.len();
    if n > MAX_GENERATORS {
        return Err(Error::ResourceLimit(format!(
            "enumerating Λ of a {n}-dimensional space exceeds the cap of {MAX_GENERATORS}"
        )));
    }
    let rank = weights.first().map_or(0, Vec::len);
    let mut acc: Vec<BTreeMap<Vec<i64>, u64>> = vec![BTreeMap::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let mut e = vec![0i64; rank];
        for (p, w) in weights.iter().enumerate() {
            if mask & (1 << p) != 0 {
                for (x, y) in e.iter_mut().zip(w) {
                    *x += y;
                }
            }
        }
        *acc[mask.count_ones() as usize].entry(e).or_insert(0) += 1;
    }
    Ok(acc
        .into_iter()
        .map(|m| {
            let mut chi = LaurentCharacter::zero(rank);
            for (e, c) in m {
                chi.add_term(e, BigInt::from(c));
            }
            chi
        })
        .collect())
}

fn simple_weights(desc: &AbelianDescriptor) -> Result<(Vec<Vec<i64>>, usize, usize)> {
    desc.validate()?;
    let block = desc.single()?;
    let f = &block.factor;
    let m = f.box_bound(block.g)? as usize;
    Ok((h1_weights(f.n, f.d, m), f.n, f.d))
}

/// Multiplicity of each irreducible rational constituent, keyed by its Γ-orbit ξ.
pub fn xi_multiplicities(desc: &AbelianDescriptor) -> Result<BTreeMap<ProductClass, BigInt>> {
    let (weights, n, d) = simple_weights(desc)?;
    let group = desc.single()?.factor.galois_group()?;
    let blocks = vec![d; n];
    let mut out: BTreeMap<ProductClass, BigInt> = BTreeMap::new();
    for (deg, chi) in graded_character(&weights)?.iter().enumerate() {
        let mut seen: BTreeMap<OrbitClass, (BigInt, usize)> = BTreeMap::new();
        for (label, c) in decompose_blocks(chi, &blocks)? {
            let mw = MultiWeight::new(label.0)?;
            let orbit = orbit_of(&mw, &group)?;
            if orbit.weight()? as usize != deg {
                return Err(Error::Verification(format!("{mw} found in degree {deg}")));
            }
            let slot = seen.entry(orbit).or_insert_with(|| (c.clone(), 0));
            if slot.0 != c {
                return Err(Error::Verification(format!(
                    "multiplicity of {mw} differs from the rest of its Γ-orbit"
                )));
            }
            slot.1 += 1;
        }
        for (orbit, (c, count)) in seen {
            if count != orbit.orbit_size {
                return Err(Error::Verification(format!(
                    "only {count} of the {} members of {orbit} occur",
                    orbit.orbit_size
                )));
            }
            out.insert(ProductClass { parts: vec![orbit] }, c);
        }
    }
    Ok(out)
}

/// One irreducible string peeled off the cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringCount {
    pub psi: LefschetzLabel,
    /// Highest weight, in g₀-torus coordinates.
    pub highest: Vec<i64>,
    #[serde(serialize_with = "ser_bigint")]
    pub mult: BigInt,
    /// Cohomological degrees the string occupies.
    pub degrees: Vec<u64>,
    /// Q̄-dimension of its lowest level, i.e. of its primitive part.
    #[serde(serialize_with = "ser_bigint")]
    pub lowest_dim: BigInt,
}

fn label_of(s: &FamilySetup, hw: &[i64]) -> Result<LefschetzLabel> {
    Ok(match s.family {
        LefschetzFamily::Classical => LefschetzLabel::Classical(hw[0] as u32),
        LefschetzFamily::TotallyReal => {
            let mw = MultiWeight::new(hw.iter().map(|&b| WeightTuple::new(vec![b])).collect::<Result<Vec<_>>>()?)?;
            LefschetzLabel::TotallyReal(orbit_of(&mw, &s.group)?)
        }
        LefschetzFamily::QuaternionIndefinite => {
            LefschetzLabel::Quaternion(SpFourIrrepLabel::new((hw[0] - hw[1]) as u32, hw[1] as u32))
        }
    })
}

/// Peels irreducible strings starting from the lowest degree still present.
pub fn string_counts(s: &FamilySetup) -> Result<Vec<StringCount>> {
    let rank = s.torus_rank();
    let weights = h1_weights(s.factor.n, s.factor.d, 2 * s.h as usize);
    let mut rem = LaurentCharacter::zero(rank);
    for chi in graded_character(&weights)? {
        rem = &rem + &chi;
    }
    rem = rem.map_exponents(rank, |e| e.iter().map(|&w| s.h - w).collect());
    let g = s.g as i64;
    let mut out = Vec::new();
    while !rem.is_zero() {
        let (e, c) = rem
            .terms()
            .iter()
            .max_by(|(a, _), (b, _)| {
                let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
                sa.cmp(&sb).then_with(|| a.cmp(b))
            })
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero remainder");
        if !c.is_positive() {
            return Err(Error::NotACharacter(format!("multiplicity {c} at the lowest level {e:?}")));
        }
        let chi = absolute_character(s, &e)?;
        let top: i64 = e.iter().sum();
        let lowest_dim = chi
            .terms()
            .iter()
            .filter(|(x, _)| x.iter().sum::<i64>() == top)
            .map(|(_, c)| c.clone())
            .sum();
        let mut degrees: Vec<u64> = chi.terms().keys().map(|x| (g - x.iter().sum::<i64>()) as u64).collect();
        degrees.sort_unstable();
        degrees.dedup();
        rem = &rem - &chi.scale(&c);
        out.push(StringCount { psi: label_of(s, &e)?, highest: e, mult: c, degrees, lowest_dim });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiCount {
    pub xi: ProductClass,
    #[serde(serialize_with = "ser_bigint")]
    pub mult: BigInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedMultiplicities {
    pub xi: Vec<XiCount>,
    pub strings: Option<Vec<StringCount>>,
}

/// Per-ξ multiplicities, and per-string counts when the Lefschetz family is supported.
pub fn graded_multiplicities(desc: &AbelianDescriptor) -> Result<GradedMultiplicities> {
    let xi = xi_multiplicities(desc)?.into_iter().map(|(xi, mult)| XiCount { xi, mult }).collect();
    let strings = match setup(desc) {
        Ok(s) => Some(string_counts(&s)?),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(GradedMultiplicities { xi, strings })
}

/// C(2g, g−k) − C(2g, g−k−2): the number of sl₂-strings of length k+1 in Λ(Q^{2g}).
pub fn binomial_string_count(g: u32, k: u32) -> BigInt {
    let c = |n: u32, r: i64| -> BigInt {
        if r < 0 || r > n as i64 {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for t in 0..r as u32 {
            acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
        }
        acc
    };
    let (g2, gi, ki) = (2 * g, g as i64, k as i64);
    c(g2, gi - ki) - c(g2, gi - ki - 2)
}
