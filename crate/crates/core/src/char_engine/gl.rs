use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::character::{outer_product, Exponent, LaurentCharacter, MAX_RANK};
use crate::error::{Error, Result};
use crate::weight_lattice::{BrauerTag, SimpleFactorDescriptor, WeightTuple};

/// Highest weight of an irreducible GL_d representation; entries may be negative.
pub type GLIrrepLabel = WeightTuple;

/// Vandermonde a_δ = Σ_w sgn(w) x^{w(δ)}, δ = (d−1, …, 0).
fn alternant(exp: &[i64]) -> LaurentCharacter {
    let d = exp.len();
    let mut out = LaurentCharacter::zero(d);
    for (perm, sign) in permutations_with_sign(d) {
        let e: Exponent = perm.iter().map(|&i| exp[i]).collect();
        out.add_term(e, BigInt::from(sign));
    }
    out
}

fn permutations_with_sign(d: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            // moving the k-th remaining element to the front takes k transpositions
            rec(prefix, rest, if k % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..d).collect(), 1, &mut out);
    out
}

/// Character of φ_λ by the bialternant a_{λ+δ}/a_δ; negative tails are a determinant twist.
pub fn schur_character(lambda: &GLIrrepLabel, d: usize) -> Result<LaurentCharacter> {
    if lambda.len() != d {
        return Err(Error::Input(format!("{lambda} is not a weight of GL_{d}")));
    }
    if d == 0 || d > MAX_RANK {
        return Err(Error::ResourceLimit(format!("rank {d} outside 1..={MAX_RANK}")));
    }
    let twist = (-lambda.entries()[d - 1]).max(0);
    let shifted: Vec<i64> = lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + twist + (d - 1 - i) as i64)
        .collect();
    let delta: Vec<i64> = (0..d).map(|i| (d - 1 - i) as i64).collect();
    let chi = alternant(&shifted).div_exact(&alternant(&delta))?;
    Ok(chi.shift(&vec![-twist; d]))
}

/// ∏_{i<j} (λ_i − λ_j + j − i)/(j − i).
pub fn gl_dimension(lambda: &GLIrrepLabel) -> BigInt {
    let e = lambda.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            num *= e[i] - e[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// Character of Λ^i of a module with character `base`.
pub fn exterior_power_character(base: &LaurentCharacter, i: i64) -> Result<LaurentCharacter> {
    if i < 0 {
        return Err(Error::Input(format!("exterior power of negative degree {i}")));
    }
    let all = exterior_algebra_characters(base)?;
    Ok(all.get(i as usize).cloned().unwrap_or_else(|| LaurentCharacter::zero(base.rank())))
}

/// Characters of Λ^0, …, Λ^N for N = dim base: the elementary symmetric
/// functions of the weight multiset.
pub fn exterior_algebra_characters(base: &LaurentCharacter) -> Result<Vec<LaurentCharacter>> {
    if !base.has_nonnegative_coefficients() {
        return Err(Error::NotACharacter(format!("{base} has a negative coefficient")));
    }
    let rank = base.rank();
    let mut e = vec![LaurentCharacter::one(rank)];
    for (w, mult) in base.terms() {
        let copies: usize = mult.try_into().map_err(|_| Error::ResourceLimit("weight multiplicity too large".into()))?;
        let x = LaurentCharacter::monomial(w.clone(), BigInt::one());
        for _ in 0..copies {
            e.push(LaurentCharacter::zero(rank));
            for k in (1..e.len()).rev() {
                let add = &e[k - 1] * &x;
                e[k] = &e[k] + &add;
            }
        }
    }
    Ok(e)
}

/// One irreducible of GL_{d₁} × ⋯ × GL_{d_r}: one highest weight per block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockLabel(pub Vec<GLIrrepLabel>);

impl Serialize for BlockLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn block_schur_character(label: &BlockLabel) -> Result<LaurentCharacter> {
    let mut acc = LaurentCharacter::one(0);
    for lambda in &label.0 {
        acc = outer_product(&acc, &schur_character(lambda, lambda.len())?);
    }
    Ok(acc)
}

pub fn block_dimension(label: &BlockLabel) -> BigInt {
    label.0.iter().map(gl_dimension).product()
}

fn split_blocks(exp: &[i64], blocks: &[usize]) -> Option<BlockLabel> {
    let mut start = 0;
    let mut parts = Vec::with_capacity(blocks.len());
    for &b in blocks {
        parts.push(WeightTuple::new(exp[start..start + b].to_vec()).ok()?);
        start += b;
    }
    Some(BlockLabel(parts))
}

/// Peels a character of GL_{d₁} × ⋯ × GL_{d_r} into irreducibles, lex-max first.
pub fn decompose_blocks(chi: &LaurentCharacter, blocks: &[usize]) -> Result<Vec<(BlockLabel, BigInt)>> {
    if blocks.iter().sum::<usize>() != chi.rank() {
        return Err(Error::Input(format!(
            "block sizes {blocks:?} do not add up to rank {}",
            chi.rank()
        )));
    }
    let mut rem = chi.clone();
    let mut out = Vec::new();
    let mut cache: BTreeMap<BlockLabel, LaurentCharacter> = BTreeMap::new();
    while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
        let label = split_blocks(&e, blocks).ok_or_else(|| {
            Error::NotACharacter(format!("leading exponent {e:?} is not dominant"))
        })?;
        if c.is_negative() {
            return Err(Error::NotACharacter(format!(
                "negative multiplicity {c} for highest weight {e:?}"
            )));
        }
        let s = match cache.get(&label) {
            Some(s) => s.clone(),
            None => {
                let s = block_schur_character(&label)?;
                cache.insert(label.clone(), s.clone());
                s
            }
        };
        rem = &rem - &s.scale(&c);
        out.push((label, c));
    }
    Ok(out)
}

/// Highest-weight peeling for a single GL_d.
pub fn decompose_gl(chi: &LaurentCharacter, d: usize) -> Result<Vec<(GLIrrepLabel, BigInt)>> {
    Ok(decompose_blocks(chi, &[d])?
        .into_iter()
        .map(|(mut l, c)| (l.0.pop().expect("one block"), c))
        .collect())
}

/// The integer d(λ) dividing d, when the descriptor determines it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DLambda {
    Known(u32),
    Unknown,
}

impl Serialize for DLambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DLambda::Known(v) => s.serialize_u32(*v),
            DLambda::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl std::fmt::Display for DLambda {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DLambda::Known(v) => write!(f, "{v}"),
            DLambda::Unknown => write!(f, "unknown"),
        }
    }
}

pub fn d_lambda(lambda: &GLIrrepLabel, factor: &SimpleFactorDescriptor) -> DLambda {
    if let Some(&v) = factor.d_lambda_overrides.get(lambda.entries()) {
        return DLambda::Known(v);
    }
    if factor.d == 1 {
        return DLambda::Known(1);
    }
    match factor.brauer {
        BrauerTag::Split => DLambda::Known(1),
        BrauerTag::QuaternionIndefinite => {
            let e = lambda.entries();
            DLambda::Known(if (e[0] - e[1]).rem_euclid(2) == 0 { 1 } else { 2 })
        }
        _ => DLambda::Unknown,
    }
}

/// Multiplicity of φ_λ in a decomposition, zero when absent.
pub fn multiplicity_of(decomp: &[(GLIrrepLabel, BigInt)], lambda: &GLIrrepLabel) -> BigInt {
    decomp
        .iter()
        .find(|(l, _)| l == lambda)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i64]) -> WeightTuple {
        WeightTuple::new(v.to_vec()).unwrap()
    }

    fn ch(rank: usize, terms: &[(&[i64], i64)]) -> LaurentCharacter {
        let mut c = LaurentCharacter::zero(rank);
        for (e, k) in terms {
            c.add_term(e.to_vec(), BigInt::from(*k));
        }
        c
    }

    #[test]
    fn small_schur_characters() {
        assert_eq!(schur_character(&wt(&[1, 0]), 2).unwrap(), ch(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(schur_character(&wt(&[1, 1]), 2).unwrap(), ch(2, &[(&[1, 1], 1)]));
        assert_eq!(
            schur_character(&wt(&[2, 0]), 2).unwrap(),
            ch(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(
            schur_character(&wt(&[0, -1]), 2).unwrap(),
            ch(2, &[(&[-1, 0], 1), (&[0, -1], 1)])
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(gl_dimension(&wt(&[0, 0, 0])), BigInt::from(1));
        assert_eq!(gl_dimension(&wt(&[1, -1])), BigInt::from(3));
        for d in 1..5 {
            let mut v = vec![0; d];
            v[0] = 1;
            assert_eq!(gl_dimension(&wt(&v)), BigInt::from(d));
        }
    }

    #[test]
    fn exterior_powers_of_doubled_standard() {
        let std2 = ch(2, &[(&[1, 0], 2), (&[0, 1], 2)]);
        let l2 = exterior_power_character(&std2, 2).unwrap();
        let dec = decompose_gl(&l2, 2).unwrap();
        assert_eq!(
            dec,
            vec![(wt(&[2, 0]), BigInt::from(1)), (wt(&[1, 1]), BigInt::from(3))]
        );
        assert_eq!(exterior_power_character(&std2, 0).unwrap(), LaurentCharacter::one(2));
        assert!(exterior_power_character(&std2, 5).unwrap().is_zero());
        assert!(exterior_power_character(&std2, -1).is_err());
    }

    #[test]
    fn tensor_square_of_standard() {
        let std = ch(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let dec = decompose_gl(&(&std * &std), 2).unwrap();
        assert_eq!(dec, vec![(wt(&[2, 0]), BigInt::from(1)), (wt(&[1, 1]), BigInt::from(1))]);
    }

    #[test]
    fn virtual_characters_are_rejected() {
        let s20 = schur_character(&wt(&[2, 0]), 2).unwrap();
        let s11 = schur_character(&wt(&[1, 1]), 2).unwrap();
        assert!(matches!(decompose_gl(&(&s11 - &s20), 2), Err(Error::NotACharacter(_))));
        let lopsided = ch(2, &[(&[0, 1], 1)]);
        assert!(matches!(decompose_gl(&lopsided, 2), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn d_lambda_rules() {
        let q = SimpleFactorDescriptor::quaternion_indefinite();
        assert_eq!(d_lambda(&wt(&[1, 0]), &q), DLambda::Known(2));
        assert_eq!(d_lambda(&wt(&[2, 0]), &q), DLambda::Known(1));
        let split = SimpleFactorDescriptor::rational();
        assert_eq!(d_lambda(&wt(&[3]), &split), DLambda::Known(1));
        let mut def = SimpleFactorDescriptor::quaternion_indefinite();
        def.brauer = BrauerTag::QuaternionDefinite;
        assert_eq!(d_lambda(&wt(&[1, 0]), &def), DLambda::Unknown);
        def.d_lambda_overrides.insert(vec![1, 0], 2);
        assert_eq!(d_lambda(&wt(&[1, 0]), &def), DLambda::Known(2));
    }
}
