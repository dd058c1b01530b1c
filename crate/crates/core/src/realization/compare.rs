//! Cross-checks of the character oracle and the exterior-algebra matrices
//! against the combinatorial predictions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::algebra::{preset_for, preset_kind};
use super::graded::{binomial_string_count, string_counts, xi_multiplicities, StringCount};
use super::operators::{build_operators, OperatorSet};
use super::sparse::masks_of_degree;
use super::linalg::QMat;
use crate::error::{Error, Result};
use crate::lefschetz::{cohomology_multiplicities, refined_table, setup, LefschetzFamily, LefschetzLabel};
use crate::motivic::{realization_multiplicity, ser_bigint};
use crate::weight_lattice::{enumerate_adm_orbits, AbelianDescriptor, ProductClass};

/// Largest g for which kernels of Λ are computed by dense elimination.
pub const MAX_PRIMITIVE_G: u32 = 4;

#[derive(Debug, Clone, Serialize)]
pub struct XiCheck {
    pub xi: ProductClass,
    #[serde(serialize_with = "ser_bigint")]
    pub oracle: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub predicted: BigInt,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StringCheck {
    pub psi: LefschetzLabel,
    #[serde(serialize_with = "ser_bigint")]
    pub oracle: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub predicted: BigInt,
    pub oracle_degrees: Vec<u64>,
    pub table_degrees: Vec<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BinomialCheck {
    pub k: u32,
    #[serde(serialize_with = "ser_bigint")]
    pub oracle: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub binomial: BigInt,
    pub passed: bool,
}

/// dim of the common kernel of all Λ_c on Λ^i, against the primitive parts of the strings.
#[derive(Debug, Clone, Serialize)]
pub struct PrimitiveCheck {
    pub degree: u32,
    pub kernel_dim: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub predicted: BigInt,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub family: LefschetzFamily,
    pub xi: Vec<XiCheck>,
    pub strings: Vec<StringCheck>,
    pub binomial: Option<Vec<BinomialCheck>>,
    pub primitive: Option<Vec<PrimitiveCheck>>,
    pub notes: Vec<String>,
    pub passed: bool,
}

impl ComparisonReport {
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for x in self.xi.iter().filter(|x| !x.passed) {
            out.push(format!("ξ = {}: oracle {} vs predicted {}", x.xi, x.oracle, x.predicted));
        }
        for s in self.strings.iter().filter(|s| !s.passed) {
            out.push(format!(
                "ψ = {}: oracle {} in degrees {:?} vs predicted {} in degrees {:?}",
                s.psi, s.oracle, s.oracle_degrees, s.predicted, s.table_degrees
            ));
        }
        for b in self.binomial.iter().flatten().filter(|b| !b.passed) {
            out.push(format!("k = {}: oracle {} vs binomial count {}", b.k, b.oracle, b.binomial));
        }
        for p in self.primitive.iter().flatten().filter(|p| !p.passed) {
            out.push(format!(
                "degree {}: kernel of Λ has dimension {}, strings predict {}",
                p.degree, p.kernel_dim, p.predicted
            ));
        }
        out
    }
}

/// Dimension of ⋂_c ker(Λ_c) on Λ^i.
pub fn primitive_dimension(ops: &OperatorSet, i: u32) -> usize {
    let n = ops.generators();
    let cols = masks_of_degree(n, i).len();
    if i < 2 {
        return cols;
    }
    let blocks: Vec<QMat> = ops.lambda.iter().map(|l| l.block(n, i, i - 2)).collect();
    let rows: usize = blocks.iter().map(QMat::rows).sum();
    let mut stacked = QMat::zeros(rows, cols);
    let mut at = 0;
    for b in &blocks {
        for r in 0..b.rows() {
            for c in 0..cols {
                stacked[(at + r, c)] = b[(r, c)].clone();
            }
        }
        at += b.rows();
    }
    cols - stacked.rank()
}

fn group_strings(strings: &[StringCount]) -> Result<BTreeMap<LefschetzLabel, &StringCount>> {
    let mut out: BTreeMap<LefschetzLabel, &StringCount> = BTreeMap::new();
    for s in strings {
        if let Some(prev) = out.get(&s.psi) {
            if prev.mult != s.mult || prev.degrees != s.degrees {
                return Err(Error::Verification(format!(
                    "Galois-conjugate strings of {} disagree",
                    s.psi
                )));
            }
        } else {
            out.insert(s.psi.clone(), s);
        }
    }
    Ok(out)
}

pub fn compare_predictions(desc: &AbelianDescriptor) -> Result<ComparisonReport> {
    let s = setup(desc)?;
    let mut notes = Vec::new();

    let oracle_xi = xi_multiplicities(desc)?;
    let adm: BTreeSet<ProductClass> = enumerate_adm_orbits(desc)?.into_iter().collect();
    let keys: BTreeSet<&ProductClass> = adm.iter().chain(oracle_xi.keys()).collect();
    let mut xi = Vec::new();
    for k in keys {
        let oracle = oracle_xi.get(k).cloned().unwrap_or_default();
        let predicted = if adm.contains(k) { realization_multiplicity(k, desc)? } else { BigInt::zero() };
        let passed = oracle == predicted && adm.contains(k) == !oracle.is_zero();
        xi.push(XiCheck { xi: k.clone(), oracle, predicted, passed });
    }

    let strings = string_counts(&s)?;
    let grouped = group_strings(&strings)?;
    let predicted = cohomology_multiplicities(&s)?;
    let table: BTreeMap<LefschetzLabel, Vec<u64>> = refined_table(desc)?
        .into_iter()
        .map(|(l, t)| (l, t.keys().copied().collect()))
        .collect();
    let labels: BTreeSet<&LefschetzLabel> = grouped.keys().chain(predicted.keys()).collect();
    let mut string_checks = Vec::new();
    for l in labels {
        let oracle = grouped.get(l).map(|x| x.mult.clone()).unwrap_or_default();
        let pred = predicted.get(l).cloned().unwrap_or_default();
        let oracle_degrees = grouped.get(l).map(|x| x.degrees.clone()).unwrap_or_default();
        let table_degrees = table.get(l).cloned().unwrap_or_default();
        let passed = oracle == pred && table.contains_key(l) && oracle_degrees == table_degrees;
        string_checks.push(StringCheck { psi: l.clone(), oracle, predicted: pred, oracle_degrees, table_degrees, passed });
    }

    let binomial: Option<Vec<BinomialCheck>> = (s.family == LefschetzFamily::Classical).then(|| {
        (0..=s.g)
            .map(|k| {
                let oracle = grouped
                    .get(&LefschetzLabel::Classical(k))
                    .map(|x| x.mult.clone())
                    .unwrap_or_default();
                let binomial = binomial_string_count(s.g, k);
                BinomialCheck { k, passed: oracle == binomial, oracle, binomial }
            })
            .collect()
    });

    let primitive = match preset_kind(desc) {
        Ok(_) if desc.g > MAX_PRIMITIVE_G => {
            notes.push(format!("kernel dimensions of Λ are only computed for g ≤ {MAX_PRIMITIVE_G}"));
            None
        }
        Ok(kind) => {
            let ops = build_operators(&preset_for(kind, desc.g)?)?;
            let mut out = Vec::new();
            for i in 0..=s.g {
                let predicted: BigInt = strings
                    .iter()
                    .filter(|x| x.degrees.first() == Some(&(i as u64)))
                    .map(|x| &x.mult * &x.lowest_dim)
                    .sum();
                let kernel_dim = primitive_dimension(&ops, i);
                out.push(PrimitiveCheck { degree: i, passed: BigInt::from(kernel_dim) == predicted, kernel_dim, predicted });
            }
            Some(out)
        }
        Err(Error::Unsupported(_)) => {
            notes.push("no exterior-algebra preset for this algebra; kernel dimensions skipped".into());
            None
        }
        Err(e) => return Err(e),
    };

    let passed = xi.iter().all(|x| x.passed)
        && string_checks.iter().all(|x| x.passed)
        && binomial.iter().flatten().all(|b| b.passed)
        && primitive.iter().flatten().all(|p| p.passed);
    Ok(ComparisonReport { family: s.family, xi, strings: string_checks, binomial, primitive, notes, passed })
}
