//! Index layer of the refined motivic decomposition: records per Γ-orbit,
//! duals, Fourier partners, the Beauville grading and product index sets.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::char_engine::{
    decompose_gl, d_lambda, exterior_power_character, gl_dimension, multiplicity_of, DLambda,
    LaurentCharacter,
};
use crate::error::{Error, Result};
use crate::weight_lattice::{
    dual_with_convention, enumerate_adm_orbits, orbit_of, AbelianDescriptor, DualityConvention,
    MultiWeight, OrbitClass, ProductClass, SimpleFactorDescriptor, WeightTuple,
};

/// Largest number of cells accepted by [`product_index_set`].
pub const MAX_PRODUCT_INDICES: u128 = 1_000_000;

/// Multiplicity of φ_λ in Λ^{|λ|}(Std_d^{⊕m}).
pub fn exterior_multiplicity(lambda: &WeightTuple, m: i64) -> Result<BigInt> {
    let d = lambda.len();
    if !lambda.is_polynomial() {
        return Ok(BigInt::zero());
    }
    let mut base = LaurentCharacter::zero(d);
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        base.add_term(e, BigInt::from(m));
    }
    let power = exterior_power_character(&base, lambda.size())?;
    Ok(multiplicity_of(&decompose_gl(&power, d)?, lambda))
}

#[derive(Default)]
struct MultCache(HashMap<(WeightTuple, i64), BigInt>);

impl MultCache {
    fn get(&mut self, lambda: &WeightTuple, m: i64) -> Result<BigInt> {
        let key = (lambda.clone(), m);
        if let Some(v) = self.0.get(&key) {
            return Ok(v.clone());
        }
        let v = exterior_multiplicity(lambda, m)?;
        self.0.insert(key, v.clone());
        Ok(v)
    }
}

fn factor_realization_mult(
    blambda: &MultiWeight,
    factor: &SimpleFactorDescriptor,
    g: u32,
    cache: &mut MultCache,
) -> Result<BigInt> {
    let m = factor.box_bound(g)?;
    let mut acc = BigInt::one();
    for lambda in blambda.per_sigma() {
        acc *= cache.get(lambda, m)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Multiplicity of the irreducible attached to any polynomial multi-weight in
/// the exterior algebra on H¹, for one simple factor; zero outside X^adm.
pub fn weight_realization_multiplicity(
    blambda: &MultiWeight,
    factor: &SimpleFactorDescriptor,
    g: u32,
) -> Result<BigInt> {
    factor_realization_mult(blambda, factor, g, &mut MultCache::default())
}

pub fn realization_multiplicity(xi: &ProductClass, desc: &AbelianDescriptor) -> Result<BigInt> {
    let mut cache = MultCache::default();
    realization_multiplicity_cached(xi, desc, &mut cache)
}

fn realization_multiplicity_cached(
    xi: &ProductClass,
    desc: &AbelianDescriptor,
    cache: &mut MultCache,
) -> Result<BigInt> {
    check_arity(xi, desc)?;
    let mut acc = BigInt::one();
    for (part, block) in xi.parts.iter().zip(&desc.factors) {
        acc *= factor_realization_mult(&part.representative, &block.factor, block.g, cache)?;
    }
    Ok(acc)
}

fn check_arity(xi: &ProductClass, desc: &AbelianDescriptor) -> Result<()> {
    if xi.parts.len() != desc.factors.len() {
        return Err(Error::Input(format!(
            "class {xi} has {} parts but the descriptor has {} factors",
            xi.parts.len(),
            desc.factors.len()
        )));
    }
    Ok(())
}

/// Σ_{λ∈ξ} ∏_σ dim φ_{λ(σ)}.
pub fn dim_over_closure(xi: &ProductClass) -> BigInt {
    xi.parts
        .iter()
        .map(|o| {
            let per: BigInt = o.representative.per_sigma().iter().map(gl_dimension).product();
            per * o.orbit_size
        })
        .product()
}

/// ξ ↦ ξ^∨ on every factor, re-canonicalized.
pub fn dual_class(
    xi: &ProductClass,
    desc: &AbelianDescriptor,
    convention: DualityConvention,
) -> Result<ProductClass> {
    check_arity(xi, desc)?;
    let parts = xi
        .parts
        .iter()
        .zip(&desc.factors)
        .map(|(o, block)| {
            let group = block.factor.galois_group()?;
            let dual = dual_with_convention(&o.representative, &block.factor, block.g, convention)?;
            orbit_of(&dual, &group)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductClass { parts })
}

/// Partner ξ^∨ on the dual side, with Tate twist wt(ξ^∨) − g.
pub fn fourier_partner(
    xi: &ProductClass,
    desc: &AbelianDescriptor,
    convention: DualityConvention,
) -> Result<(ProductClass, i64)> {
    let partner = dual_class(xi, desc, convention)?;
    let twist = partner.weight()? as i64 - desc.g as i64;
    Ok((partner, twist))
}

/// d(ξ) combined over embeddings and factors: the lcm of the known values.
fn combined_d_lambda(xi: &ProductClass, desc: &AbelianDescriptor) -> DLambda {
    let mut acc = 1u32;
    for (o, block) in xi.parts.iter().zip(&desc.factors) {
        for lambda in o.representative.per_sigma() {
            match d_lambda(lambda, &block.factor) {
                DLambda::Known(v) => acc = num_integer::lcm(acc, v),
                DLambda::Unknown => return DLambda::Unknown,
            }
        }
    }
    DLambda::Known(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandRecord {
    pub xi: ProductClass,
    pub weight: u64,
    pub dual: ProductClass,
    pub fourier: ProductClass,
    pub twist: i64,
    #[serde(serialize_with = "ser_bigint")]
    pub dim_closure: BigInt,
    pub d_lambda: DLambda,
    #[serde(serialize_with = "ser_bigint")]
    pub mult: BigInt,
}

pub(crate) fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// Summary of one factor, echoed in reports.
#[derive(Debug, Clone, Serialize)]
pub struct FactorEcho {
    pub n: usize,
    pub d: usize,
    pub g: u32,
    pub brauer: &'static str,
    pub involution: &'static str,
    pub galois_order: usize,
    pub weight_bound: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DescriptorEcho {
    pub g: u32,
    pub factors: Vec<FactorEcho>,
}

impl DescriptorEcho {
    pub fn new(desc: &AbelianDescriptor) -> Result<Self> {
        let factors = desc
            .factors
            .iter()
            .map(|b| {
                Ok(FactorEcho {
                    n: b.factor.n,
                    d: b.factor.d,
                    g: b.g,
                    brauer: b.factor.brauer.as_str(),
                    involution: b.factor.involution.as_str(),
                    galois_order: b.factor.galois_group()?.order(),
                    weight_bound: b.factor.box_bound(b.g)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DescriptorEcho { g: desc.g, factors })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeGroup {
    pub degree: u64,
    pub xis: Vec<ProductClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Totals {
    pub classes: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub realization_dim: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub expected_dim: BigInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub descriptor: DescriptorEcho,
    pub records: Vec<SummandRecord>,
    pub degrees: Vec<DegreeGroup>,
    pub totals: Totals,
    pub notes: Vec<String>,
}

pub fn decompose(desc: &AbelianDescriptor) -> Result<DecompositionReport> {
    decompose_with(desc, DualityConvention::DualScheme)
}

pub fn decompose_with(desc: &AbelianDescriptor, convention: DualityConvention) -> Result<DecompositionReport> {
    let classes = enumerate_adm_orbits(desc)?;
    let mut cache = MultCache::default();
    let mut records = Vec::with_capacity(classes.len());
    for xi in classes {
        let weight = xi.weight()?;
        let dual = dual_class(&xi, desc, DualityConvention::DualScheme)?;
        let (fourier, twist) = fourier_partner(&xi, desc, convention)?;
        let mult = realization_multiplicity_cached(&xi, desc, &mut cache)?;
        records.push(SummandRecord {
            dim_closure: dim_over_closure(&xi),
            d_lambda: combined_d_lambda(&xi, desc),
            xi,
            weight,
            dual,
            fourier,
            twist,
            mult,
        });
    }
    let mut by_degree: BTreeMap<u64, Vec<ProductClass>> =
        (0..=2 * desc.g as u64).map(|i| (i, Vec::new())).collect();
    for r in &records {
        by_degree.entry(r.weight).or_default().push(r.xi.clone());
    }
    let degrees = by_degree
        .into_iter()
        .map(|(degree, xis)| DegreeGroup { degree, xis })
        .collect();
    let realization_dim = records.iter().map(|r| &r.mult * &r.dim_closure).sum();
    let totals = Totals {
        classes: records.len(),
        realization_dim,
        expected_dim: BigInt::one() << (2 * desc.g as usize),
    };
    let mut notes = Vec::new();
    if !desc.is_simple() {
        notes.push(
            "several simple factors: the admissibility bound 2g_j/(n_j d_j) is applied factorwise".into(),
        );
    }
    if convention == DualityConvention::Polarization {
        notes.push("Fourier partners use the conjugated (polarization) identification of the center".into());
    }
    Ok(DecompositionReport { descriptor: DescriptorEcho::new(desc)?, records, degrees, totals, notes })
}

/// s ↦ {ξ : wt ξ = 2j − s}. Rows with s < 0 are kept only on request.
pub fn beauville_table(
    desc: &AbelianDescriptor,
    j: u32,
    include_negative: bool,
) -> Result<BTreeMap<i64, Vec<ProductClass>>> {
    if j > desc.g {
        return Err(Error::Input(format!("codimension {j} exceeds g = {}", desc.g)));
    }
    let mut table: BTreeMap<i64, Vec<ProductClass>> = BTreeMap::new();
    for xi in enumerate_adm_orbits(desc)? {
        let s = 2 * j as i64 - xi.weight()? as i64;
        if s >= 0 || include_negative {
            table.entry(s).or_default().push(xi);
        }
    }
    Ok(table)
}

/// Γ-orbit of σ ↦ |λ(σ)|, per factor.
pub fn coarse_map(xi: &ProductClass, desc: &AbelianDescriptor) -> Result<ProductClass> {
    check_arity(xi, desc)?;
    let parts = xi
        .parts
        .iter()
        .zip(&desc.factors)
        .map(|(o, block)| {
            let sizes = o
                .representative
                .per_sigma()
                .iter()
                .map(|t| WeightTuple::new(vec![t.size()]))
                .collect::<Result<Vec<_>>>()?;
            orbit_of(&MultiWeight::new(sizes)?, &block.factor.galois_group()?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductClass { parts })
}

/// Groups the records of a report by their coarse class.
pub fn coarse_fibers(
    report: &DecompositionReport,
    desc: &AbelianDescriptor,
) -> Result<BTreeMap<ProductClass, Vec<ProductClass>>> {
    let mut out: BTreeMap<ProductClass, Vec<ProductClass>> = BTreeMap::new();
    for r in &report.records {
        out.entry(coarse_map(&r.xi, desc)?).or_default().push(r.xi.clone());
    }
    Ok(out)
}

/// One cell of the index box ∏ [0, 2g_ν].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductIndex {
    pub index: Vec<u32>,
    /// How (m_1, …, m_r) acts on this summand.
    pub action: String,
}

pub fn product_index_set(dims: &[u32]) -> Result<Vec<ProductIndex>> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Input("dimensions must be a nonempty list of positive integers".into()));
    }
    let size: u128 = dims.iter().map(|&g| 2 * g as u128 + 1).product();
    if size > MAX_PRODUCT_INDICES {
        return Err(Error::ResourceLimit(format!("index set of size {size}")));
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut idx = vec![0u32; dims.len()];
    loop {
        let mut action = String::new();
        for (nu, &i) in idx.iter().enumerate() {
            if nu > 0 {
                action.push('·');
            }
            let _ = write!(action, "m{}^{}", nu + 1, i);
        }
        out.push(ProductIndex { index: idx.clone(), action });
        let mut nu = dims.len();
        loop {
            if nu == 0 {
                return Ok(out);
            }
            nu -= 1;
            idx[nu] += 1;
            if idx[nu] <= 2 * dims[nu] {
                break;
            }
            idx[nu] = 0;
        }
    }
}

/// Looks up the record for a class given by its representative.
pub fn find_record<'a>(report: &'a DecompositionReport, xi: &ProductClass) -> Option<&'a SummandRecord> {
    report.records.iter().find(|r| &r.xi == xi)
}

/// A single-factor class from a multi-weight, canonicalized.
pub fn simple_class(blambda: &MultiWeight, factor: &SimpleFactorDescriptor) -> Result<ProductClass> {
    let o: OrbitClass = orbit_of(blambda, &factor.galois_group()?)?;
    Ok(ProductClass { parts: vec![o] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight_lattice::{FactorBlock, SimpleFactorDescriptor};

    fn quat(g: u32) -> AbelianDescriptor {
        AbelianDescriptor::simple(SimpleFactorDescriptor::quaternion_indefinite(), g).unwrap()
    }

    fn cls(desc: &AbelianDescriptor, rows: &[&[i64]]) -> ProductClass {
        let mw = MultiWeight::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        simple_class(&mw, &desc.factors[0].factor).unwrap()
    }

    #[test]
    fn quaternion_g2_degrees() {
        let desc = quat(2);
        let rep = decompose(&desc).unwrap();
        let deg2: Vec<String> = rep.degrees[2].xis.iter().map(|x| x.to_string()).collect();
        assert_eq!(deg2, ["(1,1)", "(2,0)"]);
        assert_eq!(rep.totals.realization_dim, BigInt::from(16));
    }

    #[test]
    fn rational_binomials() {
        let desc = AbelianDescriptor::simple(SimpleFactorDescriptor::rational(), 3).unwrap();
        let rep = decompose(&desc).unwrap();
        assert_eq!(rep.records.len(), 7);
        let binom = [1, 6, 15, 20, 15, 6, 1];
        for (r, b) in rep.records.iter().zip(binom) {
            assert_eq!(r.mult, BigInt::from(b));
            assert_eq!(r.dim_closure, BigInt::one());
        }
    }

    #[test]
    fn totally_real_weights() {
        let desc = AbelianDescriptor::simple(SimpleFactorDescriptor::totally_real_symmetric(2), 2).unwrap();
        let rep = decompose(&desc).unwrap();
        let w: Vec<u64> = rep.records.iter().map(|r| r.weight).collect();
        assert_eq!(w, [0, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn fourier_examples() {
        let desc = quat(2);
        let (p, t) = fourier_partner(&cls(&desc, &[&[1, 0]]), &desc, DualityConvention::DualScheme).unwrap();
        assert_eq!((p.to_string(), t), ("(2,1)".to_string(), 1));
        let (p, t) = fourier_partner(&cls(&desc, &[&[1, 1]]), &desc, DualityConvention::DualScheme).unwrap();
        assert_eq!((p.to_string(), t), ("(1,1)".to_string(), 0));
        let q = AbelianDescriptor::simple(SimpleFactorDescriptor::rational(), 2).unwrap();
        let (p, t) = fourier_partner(&cls(&q, &[&[4]]), &q, DualityConvention::DualScheme).unwrap();
        assert_eq!((p.to_string(), t), ("(0)".to_string(), -2));
    }

    #[test]
    fn beauville_rows() {
        let desc = quat(2);
        let t = beauville_table(&desc, 1, false).unwrap();
        let show = |s: i64| t[&s].iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(t.len(), 3);
        assert_eq!(show(0), ["(1,1)", "(2,0)"]);
        assert_eq!(show(1), ["(1,0)"]);
        assert_eq!(show(2), ["(0,0)"]);
        let full = beauville_table(&desc, 1, true).unwrap();
        assert_eq!(full.len(), 5);
        let ell = AbelianDescriptor::simple(SimpleFactorDescriptor::rational(), 1).unwrap();
        assert_eq!(beauville_table(&ell, 1, false).unwrap().len(), 3);
        assert!(beauville_table(&ell, 2, false).is_err());
    }

    #[test]
    fn realization_examples() {
        let desc = quat(2);
        assert_eq!(realization_multiplicity(&cls(&desc, &[&[1, 1]]), &desc).unwrap(), BigInt::from(3));
        assert_eq!(realization_multiplicity(&cls(&desc, &[&[2, 0]]), &desc).unwrap(), BigInt::from(1));
        assert_eq!(realization_multiplicity(&cls(&desc, &[&[0, 0]]), &desc).unwrap(), BigInt::from(1));
        let bad = MultiWeight::from_rows(vec![vec![3, 0]]).unwrap();
        assert!(weight_realization_multiplicity(&bad, &desc.factors[0].factor, 2).unwrap().is_zero());
    }

    #[test]
    fn coarse_examples() {
        let desc = quat(2);
        let a = coarse_map(&cls(&desc, &[&[2, 0]]), &desc).unwrap();
        let b = coarse_map(&cls(&desc, &[&[1, 1]]), &desc).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(2)");
        let tr = AbelianDescriptor::simple(SimpleFactorDescriptor::totally_real_symmetric(2), 2).unwrap();
        assert_eq!(coarse_map(&cls(&tr, &[&[2], &[0]]), &tr).unwrap().to_string(), "[0,2]");
    }

    #[test]
    fn product_boxes() {
        assert_eq!(product_index_set(&[1, 1]).unwrap().len(), 9);
        assert_eq!(product_index_set(&[1, 2]).unwrap().len(), 15);
        let single: Vec<Vec<u32>> = product_index_set(&[2]).unwrap().into_iter().map(|c| c.index).collect();
        assert_eq!(single, (0..=4).map(|i| vec![i]).collect::<Vec<_>>());
        assert_eq!(product_index_set(&[1, 1]).unwrap()[5].action, "m1^1·m2^2");
        assert!(product_index_set(&[0]).is_err());
    }

    #[test]
    fn two_factor_completeness() {
        let desc = AbelianDescriptor::new(
            3,
            vec![
                FactorBlock { factor: SimpleFactorDescriptor::rational(), g: 1 },
                FactorBlock { factor: SimpleFactorDescriptor::quaternion_indefinite(), g: 2 },
            ],
        )
        .unwrap();
        let rep = decompose(&desc).unwrap();
        assert_eq!(rep.totals.realization_dim, BigInt::from(64));
        assert_eq!(rep.notes.len(), 1);
    }
}
