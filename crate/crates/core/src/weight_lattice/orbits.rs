use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::descriptor::{AbelianDescriptor, SimpleFactorDescriptor};
use super::group::PermutationGroup;
use super::weights::{weight_of, MultiWeight, WeightTuple};
use crate::error::{Error, Result};

/// Maximum number of orbits returned by one enumeration.
pub const MAX_ORBITS: usize = 1_000_000;
/// Budget for (elements of X^adm) × |Γ| during canonical-form testing.
pub const MAX_ORBIT_WORK: u128 = 200_000_000;

/// A Γ-orbit stored through its lex-min representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitClass {
    pub representative: MultiWeight,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
}

impl OrbitClass {
    pub fn weight(&self) -> Result<u64> {
        weight_of(&self.representative)
    }

    /// Every element of the orbit, sorted.
    pub fn members(&self, group: &PermutationGroup) -> Vec<MultiWeight> {
        orbit_members(&self.representative, group).into_iter().collect()
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}

impl Serialize for OrbitClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.representative.serialize(s)
    }
}

fn orbit_members(blambda: &MultiWeight, group: &PermutationGroup) -> BTreeSet<MultiWeight> {
    group.elements().iter().map(|p| blambda.permuted(p)).collect()
}

pub fn orbit_of(blambda: &MultiWeight, group: &PermutationGroup) -> Result<OrbitClass> {
    if blambda.n() != group.degree() {
        return Err(Error::Input(format!(
            "multi-weight with {} components under a group of degree {}",
            blambda.n(),
            group.degree()
        )));
    }
    let members = orbit_members(blambda, group);
    let orbit_size = members.len();
    let representative = members.into_iter().next().expect("orbit contains its element");
    Ok(OrbitClass { representative, orbit_size, stabilizer_order: group.order() / orbit_size })
}

/// Λ^adm for tuples of length `d` bounded by `bound`, in increasing lex order.
pub fn box_weights(d: usize, bound: i64) -> Vec<WeightTuple> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fill_box(d, bound, &mut cur, &mut out);
    out
}

fn fill_box(d: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<WeightTuple>) {
    if cur.len() == d {
        out.push(WeightTuple::new(cur.clone()).expect("generated tuples are dominant"));
        return;
    }
    for x in 0..=cap {
        cur.push(x);
        fill_box(d, x, cur, out);
        cur.pop();
    }
}

/// Orbits of X^adm for one factor, sorted by (wt, representative).
pub fn enumerate_factor_orbits(factor: &SimpleFactorDescriptor, g: u32) -> Result<Vec<OrbitClass>> {
    let group = factor.galois_group()?;
    let bound = factor.box_bound(g)?;
    let tuples = box_weights(factor.d, bound);
    let n = factor.n;
    let elements = (tuples.len() as u128).pow(n as u32);
    if elements * group.order() as u128 > MAX_ORBIT_WORK {
        return Err(Error::ResourceLimit(format!(
            "X^adm has {elements} elements under a group of order {}; too large to enumerate",
            group.order()
        )));
    }

    // Since `tuples` is lex sorted, comparing index vectors lexicographically
    // is the same as comparing the multi-weights.
    let mut orbits = Vec::new();
    let mut idx = vec![0usize; n];
    let mut image = vec![0usize; n];
    'outer: loop {
        let mut images = BTreeSet::new();
        let mut canonical = true;
        for p in group.elements() {
            for s in 0..n {
                image[p[s]] = idx[s];
            }
            if image < idx {
                canonical = false;
                break;
            }
            images.insert(image.clone());
        }
        if canonical {
            if orbits.len() >= MAX_ORBITS {
                return Err(Error::ResourceLimit(format!("more than {MAX_ORBITS} orbits")));
            }
            let representative =
                MultiWeight::new(idx.iter().map(|&i| tuples[i].clone()).collect())?;
            let orbit_size = images.len();
            orbits.push(OrbitClass {
                representative,
                orbit_size,
                stabilizer_order: group.order() / orbit_size,
            });
        }
        // odometer, last coordinate fastest
        for s in (0..n).rev() {
            idx[s] += 1;
            if idx[s] < tuples.len() {
                continue 'outer;
            }
            idx[s] = 0;
        }
        break;
    }
    let mut keyed = orbits
        .into_iter()
        .map(|o| Ok((o.weight()?, o)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, o)| o).collect())
}

/// An element of the product ∏_j X_j^adm/Γ_j, one orbit per simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductClass {
    pub parts: Vec<OrbitClass>,
}

impl ProductClass {
    pub fn weight(&self) -> Result<u64> {
        self.parts.iter().map(OrbitClass::weight).sum()
    }

    pub fn orbit_size(&self) -> usize {
        self.parts.iter().map(|o| o.orbit_size).product()
    }
}

impl fmt::Display for ProductClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [only] = self.parts.as_slice() {
            return write!(f, "{only}");
        }
        for (i, o) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "⊠")?;
            }
            write!(f, "{o}")?;
        }
        Ok(())
    }
}

impl Serialize for ProductClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let [only] = self.parts.as_slice() {
            only.serialize(s)
        } else {
            self.parts.serialize(s)
        }
    }
}

/// The full index set X^adm/Γ, as a product over factors, sorted by (wt, lex).
pub fn enumerate_adm_orbits(desc: &AbelianDescriptor) -> Result<Vec<ProductClass>> {
    desc.validate()?;
    let mut acc: Vec<ProductClass> = vec![ProductClass { parts: Vec::new() }];
    for block in &desc.factors {
        let orbits = enumerate_factor_orbits(&block.factor, block.g)?;
        if acc.len().saturating_mul(orbits.len()) > MAX_ORBITS {
            return Err(Error::ResourceLimit(format!("more than {MAX_ORBITS} orbits")));
        }
        acc = acc
            .iter()
            .flat_map(|prefix| {
                orbits.iter().map(move |o| {
                    let mut parts = prefix.parts.clone();
                    parts.push(o.clone());
                    ProductClass { parts }
                })
            })
            .collect();
    }
    let mut keyed = acc
        .into_iter()
        .map(|c| Ok((c.weight()?, c)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

/// Σ_{λ ∈ Λ^adm} x^{|λ|} as a coefficient list (index = exponent).
pub fn adm_generating_function(factor: &SimpleFactorDescriptor, g: u32) -> Result<Vec<u64>> {
    let bound = factor.box_bound(g)?;
    let mut coeffs = vec![0u64; (factor.d as i64 * bound) as usize + 1];
    for t in box_weights(factor.d, bound) {
        coeffs[t.size() as usize] += 1;
    }
    Ok(coeffs)
}

/// Generating function of X^adm itself: the n-th power of the one above.
pub fn xadm_generating_function(factor: &SimpleFactorDescriptor, g: u32) -> Result<Vec<u64>> {
    let base = adm_generating_function(factor, g)?;
    let mut acc = vec![1u64];
    for _ in 0..factor.n {
        acc = poly_mul(&acc, &base);
    }
    Ok(acc)
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight_lattice::descriptor::FactorBlock;

    fn mw(rows: &[&[i64]]) -> MultiWeight {
        MultiWeight::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn two_element_orbit() {
        let s2 = PermutationGroup::symmetric(2).unwrap();
        let o = orbit_of(&mw(&[&[1], &[0]]), &s2).unwrap();
        assert_eq!(o.representative, mw(&[&[0], &[1]]));
        assert_eq!((o.orbit_size, o.stabilizer_order), (2, 1));
        let fixed = orbit_of(&mw(&[&[1], &[1]]), &s2).unwrap();
        assert_eq!((fixed.orbit_size, fixed.stabilizer_order), (1, 2));
        let triv = orbit_of(&mw(&[&[1], &[0]]), &PermutationGroup::trivial(2)).unwrap();
        assert_eq!(triv.orbit_size, 1);
    }

    #[test]
    fn quaternion_g2_orbits() {
        let q = SimpleFactorDescriptor::quaternion_indefinite();
        let reps: Vec<String> = enumerate_factor_orbits(&q, 2)
            .unwrap()
            .iter()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(reps, ["(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)"]);
    }

    #[test]
    fn totally_real_pair() {
        let f = SimpleFactorDescriptor::totally_real_symmetric(2);
        let reps: Vec<String> = enumerate_factor_orbits(&f, 2)
            .unwrap()
            .iter()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(reps, ["[0,0]", "[0,1]", "[0,2]", "[1,1]", "[1,2]", "[2,2]"]);
    }

    #[test]
    fn rational_has_2g_plus_1() {
        for g in 1..6 {
            let orbits = enumerate_factor_orbits(&SimpleFactorDescriptor::rational(), g).unwrap();
            assert_eq!(orbits.len(), 2 * g as usize + 1);
        }
    }

    #[test]
    fn generating_function_examples() {
        let q = SimpleFactorDescriptor::quaternion_indefinite();
        assert_eq!(adm_generating_function(&q, 2).unwrap(), vec![1, 1, 2, 1, 1]);
        assert_eq!(
            adm_generating_function(&SimpleFactorDescriptor::rational(), 3).unwrap(),
            vec![1; 7]
        );
    }

    #[test]
    fn product_of_two_factors() {
        let desc = AbelianDescriptor::new(
            3,
            vec![
                FactorBlock { factor: SimpleFactorDescriptor::rational(), g: 1 },
                FactorBlock { factor: SimpleFactorDescriptor::quaternion_indefinite(), g: 2 },
            ],
        )
        .unwrap();
        let all = enumerate_adm_orbits(&desc).unwrap();
        assert_eq!(all.len(), 3 * 6);
        let weights: Vec<u64> = all.iter().map(|c| c.weight().unwrap()).collect();
        assert!(weights.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(weights.last(), Some(&6));
    }

    #[test]
    fn work_cap() {
        let f = SimpleFactorDescriptor::totally_real_symmetric(8);
        assert!(matches!(enumerate_factor_orbits(&f, 40), Err(Error::ResourceLimit(_))));
    }
}
