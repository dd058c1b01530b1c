//! JSON descriptor files.

use std::collections::BTreeMap;
use std::path::Path;

use motdec_core::weight_lattice::{
    AbelianDescriptor, BrauerTag, FactorBlock, InvolutionTag, QuaternionParams, SimpleFactorDescriptor,
};
use motdec_core::{Error, Result};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub g: u32,
    pub factors: Vec<FactorEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorEntry {
    pub n: usize,
    pub d: usize,
    pub galois_generators: Vec<Vec<usize>>,
    pub brauer: BrauerTag,
    pub involution: InvolutionTag,
    #[serde(default)]
    pub quaternion: Option<QuaternionParams>,
    /// Relative dimension carried by this factor; defaults to g for a single factor.
    #[serde(default)]
    pub g: Option<u32>,
    #[serde(default)]
    pub conjugation: Option<Vec<usize>>,
    #[serde(default)]
    pub real_quadratic: Option<i64>,
    #[serde(default)]
    pub d_lambda: Vec<DLambdaEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DLambdaEntry {
    pub lambda: Vec<i64>,
    pub value: u32,
}

impl DescriptorFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(format!("malformed descriptor file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Descriptor(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn into_descriptor(self) -> Result<AbelianDescriptor> {
        let single = self.factors.len() == 1;
        let mut blocks = Vec::with_capacity(self.factors.len());
        for (j, f) in self.factors.into_iter().enumerate() {
            let g = match (f.g, single) {
                (Some(g), _) => g,
                (None, true) => self.g,
                (None, false) => {
                    return Err(Error::Descriptor(format!(
                        "factor {j} needs its own g when there are several factors"
                    )))
                }
            };
            let mut overrides = BTreeMap::new();
            for e in f.d_lambda {
                if overrides.insert(e.lambda.clone(), e.value).is_some() {
                    return Err(Error::Descriptor(format!("factor {j}: d(λ) given twice for {:?}", e.lambda)));
                }
            }
            let mut factor = SimpleFactorDescriptor::new(f.n, f.d, f.galois_generators, f.brauer, f.involution);
            factor.quaternion = f.quaternion;
            factor.conjugation = f.conjugation;
            factor.real_quadratic = f.real_quadratic;
            factor.d_lambda_overrides = overrides;
            blocks.push(FactorBlock { factor, g });
        }
        AbelianDescriptor::new(self.g, blocks)
    }
}

pub fn load_descriptor(path: &Path) -> Result<AbelianDescriptor> {
    DescriptorFile::load(path)?.into_descriptor()
}
