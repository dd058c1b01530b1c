//! Generalized Lefschetz decomposition for the families D = Q, D a totally
//! real field and D an indefinite quaternion algebra over Q.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::char_engine::{
    branch_sp4_to_gl2, exterior_algebra_characters, gl_dimension, sp4_character, sp4_dimension,
    LaurentCharacter, SpFourIrrepLabel,
};
use crate::error::{Error, Result};
use crate::motivic::{ser_bigint, DescriptorEcho};
use crate::weight_lattice::{
    box_weights, classify, orbit_of, AbelianDescriptor, BrauerTag, InvolutionTag, MultiWeight,
    OrbitClass, PermutationGroup, ProductClass, SimpleFactorDescriptor, WeightClass, WeightTuple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LefschetzFamily {
    Classical,
    TotallyReal,
    QuaternionIndefinite,
}

impl LefschetzFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            LefschetzFamily::Classical => "classical",
            LefschetzFamily::TotallyReal => "totally-real",
            LefschetzFamily::QuaternionIndefinite => "quaternion-indefinite",
        }
    }
}

/// Which irreducible of the Lefschetz algebra a component is isotypic for.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LefschetzLabel {
    Classical(u32),
    /// Γ-orbit of (b_σ) in {0, …, h}^n, stored by its lex-min representative.
    TotallyReal(OrbitClass),
    Quaternion(SpFourIrrepLabel),
}

impl fmt::Display for LefschetzLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LefschetzLabel::Classical(k) => write!(f, "{k}"),
            LefschetzLabel::TotallyReal(o) => {
                let b: Vec<String> = bs(o).iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", b.join(","))
            }
            LefschetzLabel::Quaternion(l) => write!(f, "{},{}", l.a, l.b),
        }
    }
}

impl Serialize for LefschetzLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LefschetzLabel::Classical(k) => s.serialize_u32(*k),
            LefschetzLabel::TotallyReal(o) => bs(o).serialize(s),
            LefschetzLabel::Quaternion(l) => [l.a, l.b].serialize(s),
        }
    }
}

fn bs(o: &OrbitClass) -> Vec<i64> {
    o.representative.per_sigma().iter().map(|t| t.entries()[0]).collect()
}

/// The data every family computation needs.
#[derive(Debug, Clone)]
pub struct FamilySetup {
    pub family: LefschetzFamily,
    pub factor: SimpleFactorDescriptor,
    pub g: u32,
    /// g/(nd), an integer for every supported family.
    pub h: i64,
    pub group: PermutationGroup,
}

impl FamilySetup {
    /// Rank of the torus of g₀ ⊗ Q̄: n·d.
    pub fn torus_rank(&self) -> usize {
        self.factor.n * self.factor.d
    }
}

pub fn detect_family(desc: &AbelianDescriptor) -> Result<LefschetzFamily> {
    Ok(setup(desc)?.family)
}

pub fn setup(desc: &AbelianDescriptor) -> Result<FamilySetup> {
    desc.validate()?;
    let block = desc.single()?;
    let factor = &block.factor;
    let g = block.g;
    let gap = |what: &str| {
        Err(Error::Unsupported(format!(
            "{what}: the Lefschetz algebra is only implemented for D = Q, totally real fields and indefinite quaternion algebras over Q"
        )))
    };
    let family = match (factor.n, factor.d) {
        (1, 1) => LefschetzFamily::Classical,
        (_, 1) => match factor.involution {
            InvolutionTag::TotallyReal => LefschetzFamily::TotallyReal,
            InvolutionTag::Cm => return gap("CM center"),
            InvolutionTag::Other => return gap("center of unknown type"),
        },
        (n, 2) => match factor.brauer {
            BrauerTag::QuaternionIndefinite if n == 1 => LefschetzFamily::QuaternionIndefinite,
            BrauerTag::QuaternionIndefinite => return gap("quaternion algebra over a center other than Q"),
            BrauerTag::QuaternionDefinite => return gap("definite quaternion algebra"),
            _ => return gap("index 2 algebra that is not an indefinite quaternion algebra"),
        },
        (_, d) => return gap(&format!("division algebra of index d = {d} > 2")),
    };
    let nd = (factor.n * factor.d) as u32;
    if g % nd != 0 {
        return Err(Error::Descriptor(format!(
            "for this family n·d = {nd} must divide g = {g}"
        )));
    }
    Ok(FamilySetup {
        family,
        factor: factor.clone(),
        g,
        h: (g / nd) as i64,
        group: factor.galois_group()?,
    })
}

fn tr_orbit(setup: &FamilySetup, b: &[i64]) -> Result<OrbitClass> {
    let mw = MultiWeight::new(b.iter().map(|&x| WeightTuple::new(vec![x])).collect::<Result<Vec<_>>>()?)?;
    orbit_of(&mw, &setup.group)
}

pub fn enumerate_components(desc: &AbelianDescriptor) -> Result<Vec<LefschetzLabel>> {
    components_for(&setup(desc)?)
}

fn components_for(s: &FamilySetup) -> Result<Vec<LefschetzLabel>> {
    let h = s.h;
    Ok(match s.family {
        LefschetzFamily::Classical => (0..=s.g).map(LefschetzLabel::Classical).collect(),
        LefschetzFamily::TotallyReal => {
            let n = s.factor.n;
            let per: Vec<i64> = box_weights(1, h).iter().map(|t| t.entries()[0]).collect();
            let mut seen = std::collections::BTreeSet::new();
            let mut idx = vec![0usize; n];
            loop {
                let b: Vec<i64> = idx.iter().map(|&i| per[i]).collect();
                seen.insert(tr_orbit(s, &b)?);
                let mut k = n;
                let done = loop {
                    if k == 0 {
                        break true;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < per.len() {
                        break false;
                    }
                    idx[k] = 0;
                };
                if done {
                    break;
                }
            }
            let mut labels: Vec<OrbitClass> = seen.into_iter().collect();
            labels.sort_by_key(|o| (bs(o).iter().sum::<i64>(), o.clone()));
            labels.into_iter().map(LefschetzLabel::TotallyReal).collect()
        }
        LefschetzFamily::QuaternionIndefinite => {
            let mut out = Vec::new();
            for total in 0..=h as u32 {
                for a in (0..=total).rev() {
                    out.push(LefschetzLabel::Quaternion(SpFourIrrepLabel::new(a, total - a)));
                }
            }
            out
        }
    })
}

fn check_label(s: &FamilySetup, label: &LefschetzLabel) -> Result<()> {
    let ok = match (s.family, label) {
        (LefschetzFamily::Classical, LefschetzLabel::Classical(k)) => *k <= s.g,
        (LefschetzFamily::TotallyReal, LefschetzLabel::TotallyReal(o)) => {
            o.representative.n() == s.factor.n && bs(o).iter().all(|&b| 0 <= b && b <= s.h)
        }
        (LefschetzFamily::QuaternionIndefinite, LefschetzLabel::Quaternion(l)) => (l.a + l.b) as i64 <= s.h,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Input(format!("{label} is not a component label for the {} family", s.family.as_str())))
    }
}

/// Q̄-character of the Lefschetz-algebra irreducible with the given highest
/// weight, in the torus coordinates μ of g₀.
pub fn absolute_character(s: &FamilySetup, highest: &[i64]) -> Result<LaurentCharacter> {
    match s.family {
        LefschetzFamily::QuaternionIndefinite => {
            let (p, q) = (highest[0], highest[1]);
            if !(p >= q && q >= 0) {
                return Err(Error::NotACharacter(format!("{highest:?} is not C₂-dominant")));
            }
            sp4_character(SpFourIrrepLabel::new((p - q) as u32, q as u32))
        }
        _ => {
            let rank = highest.len();
            let mut acc = LaurentCharacter::one(rank);
            for (sigma, &b) in highest.iter().enumerate() {
                if b < 0 {
                    return Err(Error::NotACharacter(format!("{highest:?} is not sl₂-dominant")));
                }
                let mut string = LaurentCharacter::zero(rank);
                for j in 0..=b {
                    let mut e = vec![0; rank];
                    e[sigma] = -b + 2 * j;
                    string.add_term(e, BigInt::one());
                }
                acc = &acc * &string;
            }
            Ok(acc)
        }
    }
}

/// Number of Q̄-irreducibles in V_ψ ⊗ Q̄ (counted with multiplicity).
fn absolute_copies(label: &LefschetzLabel) -> usize {
    match label {
        LefschetzLabel::Classical(_) => 1,
        LefschetzLabel::TotallyReal(o) => o.orbit_size,
        LefschetzLabel::Quaternion(l) => if l.a % 2 == 0 { 1 } else { 2 },
    }
}

/// A g₀-constituent U^{(μ)} at one ħ-level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub mu: MultiWeight,
    #[serde(serialize_with = "ser_bigint")]
    pub mult: BigInt,
    /// Dimension over Q̄ of one copy.
    #[serde(serialize_with = "ser_bigint")]
    pub dim: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub level: i64,
    #[serde(serialize_with = "ser_bigint")]
    pub dim: BigInt,
    pub constituents: Vec<Constituent>,
}

fn mu_level(mu: &MultiWeight) -> i64 {
    -mu.per_sigma().iter().map(|t| t.size()).sum::<i64>()
}

/// Restriction of V_ψ to g₀, graded by the ħ-eigenvalue −Σμ.
///
/// Quaternion levels are for Γ_{a,b} over Q̄ (one copy); totally real levels
/// are Q-constituents U^{[η]} with dimension the orbit size of η.
pub fn branch_component(label: &LefschetzLabel, desc: &AbelianDescriptor) -> Result<Vec<Level>> {
    let s = setup(desc)?;
    check_label(&s, label)?;
    branch_for(&s, label)
}

fn branch_for(s: &FamilySetup, label: &LefschetzLabel) -> Result<Vec<Level>> {
    let mut constituents: Vec<Constituent> = Vec::new();
    match label {
        LefschetzLabel::Quaternion(l) => {
            for (mu, c) in branch_sp4_to_gl2(*l)? {
                let dim = gl_dimension(&mu);
                constituents.push(Constituent { mu: MultiWeight::new(vec![mu])?, mult: c, dim });
            }
        }
        LefschetzLabel::Classical(k) => {
            for j in 0..=*k as i64 {
                let mu = MultiWeight::from_rows(vec![vec![*k as i64 - 2 * j]])?;
                constituents.push(Constituent { mu, mult: BigInt::one(), dim: BigInt::one() });
            }
        }
        LefschetzLabel::TotallyReal(o) => {
            let mut chi = LaurentCharacter::zero(s.factor.n);
            for member in o.members(&s.group) {
                let b: Vec<i64> = member.per_sigma().iter().map(|t| t.entries()[0]).collect();
                chi = &chi + &absolute_character(s, &b)?;
            }
            let mut by_orbit: BTreeMap<OrbitClass, BigInt> = BTreeMap::new();
            for (e, c) in chi.terms() {
                let orbit = tr_orbit(s, e)?;
                match by_orbit.get(&orbit) {
                    Some(prev) if prev != c => {
                        return Err(Error::Verification(format!(
                            "branching of {label} is not Γ-stable at {e:?}"
                        )))
                    }
                    _ => {
                        by_orbit.insert(orbit, c.clone());
                    }
                }
            }
            for (orbit, c) in by_orbit {
                constituents.push(Constituent {
                    dim: BigInt::from(orbit.orbit_size),
                    mu: orbit.representative,
                    mult: c,
                });
            }
            // lex-descending, as for the other families
            constituents.reverse();
        }
    }
    let mut levels: BTreeMap<i64, Vec<Constituent>> = BTreeMap::new();
    for c in constituents {
        levels.entry(mu_level(&c.mu)).or_default().push(c);
    }
    Ok(levels
        .into_iter()
        .map(|(level, constituents)| Level {
            level,
            dim: constituents.iter().map(|c| &c.mult * &c.dim).sum(),
            constituents,
        })
        .collect())
}

/// Depth from the lowest ħ-level of the branching, checked against the family formula.
pub fn depth(label: &LefschetzLabel, desc: &AbelianDescriptor) -> Result<u32> {
    let s = setup(desc)?;
    check_label(&s, label)?;
    depth_for(&s, label, &branch_for(&s, label)?)
}

fn depth_for(_s: &FamilySetup, label: &LefschetzLabel, levels: &[Level]) -> Result<u32> {
    let lowest = levels.first().map(|l| l.level).unwrap_or(0);
    let m = (-lowest) as u32;
    let formula = match label {
        LefschetzLabel::Classical(k) => *k,
        LefschetzLabel::TotallyReal(o) => bs(o).iter().sum::<i64>() as u32,
        LefschetzLabel::Quaternion(l) => l.a + 2 * l.b,
    };
    if m != formula {
        return Err(Error::Verification(format!(
            "depth of {label} from the branching is {m}, the closed form gives {formula}"
        )));
    }
    Ok(m)
}

/// g₀-weight μ back to the multi-weight ξ with μ = ξ̌[g/nd].
pub fn xi_of_mu(mu: &MultiWeight, h: i64) -> Result<MultiWeight> {
    MultiWeight::new(
        mu.per_sigma()
            .iter()
            .map(|t| WeightTuple::new(t.entries().iter().rev().map(|&x| h - x).collect()))
            .collect::<Result<Vec<_>>>()?,
    )
}

fn refined_for(s: &FamilySetup, label: &LefschetzLabel, levels: &[Level]) -> Result<BTreeMap<u64, Vec<ProductClass>>> {
    let mut table: BTreeMap<u64, Vec<ProductClass>> = BTreeMap::new();
    for lvl in levels {
        let degree = s.g as i64 + lvl.level;
        for c in &lvl.constituents {
            let xi = xi_of_mu(&c.mu, s.h)?;
            if classify(&xi, &s.factor, s.g)? != WeightClass::Adm {
                return Err(Error::Verification(format!(
                    "constituent {} of {label} translates to the non-admissible {xi}",
                    c.mu
                )));
            }
            let class = ProductClass { parts: vec![orbit_of(&xi, &s.group)?] };
            if class.weight()? as i64 != degree {
                return Err(Error::Verification(format!(
                    "{xi} sits at level {} of {label} but has weight {}",
                    lvl.level,
                    class.weight()?
                )));
            }
            let row = table.entry(degree as u64).or_default();
            if !row.contains(&class) {
                row.push(class);
            }
        }
    }
    for row in table.values_mut() {
        row.sort();
        row.reverse();
    }
    Ok(table)
}

/// Degree ↦ classes ξ of a component, descending within a degree.
pub type RefinedTable = BTreeMap<u64, Vec<ProductClass>>;

pub fn component_refined(label: &LefschetzLabel, desc: &AbelianDescriptor) -> Result<RefinedTable> {
    let s = setup(desc)?;
    check_label(&s, label)?;
    refined_for(&s, label, &branch_for(&s, label)?)
}

pub fn refined_table(desc: &AbelianDescriptor) -> Result<Vec<(LefschetzLabel, RefinedTable)>> {
    let s = setup(desc)?;
    components_for(&s)?
        .into_iter()
        .map(|l| {
            let levels = branch_for(&s, &l)?;
            let t = refined_for(&s, &l, &levels)?;
            Ok((l, t))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoreAlgebra {
    Rationals,
    Quaternion,
    /// The subfield F(ψ) of the Galois closure fixed by Stab(ψ).
    Field { degree: usize },
}

impl CoreAlgebra {
    pub fn rational_dimension(&self) -> usize {
        match self {
            CoreAlgebra::Rationals => 1,
            CoreAlgebra::Quaternion => 4,
            CoreAlgebra::Field { degree } => *degree,
        }
    }
}

impl fmt::Display for CoreAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreAlgebra::Rationals => write!(f, "Q"),
            CoreAlgebra::Quaternion => write!(f, "D"),
            CoreAlgebra::Field { degree } => write!(f, "F(ψ) of degree {degree}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreInfo {
    pub algebra: CoreAlgebra,
    pub primitive_copies: u64,
    /// Copies of P(−j) in R_ψ for j = 0, …, m/… (one entry per ħ-level).
    pub copies_per_level: Vec<u64>,
    pub shape: String,
    /// Rank of the core, from the multiplicity of V_ψ in cohomology.
    pub rank: Option<u64>,
}

pub fn core_info(label: &LefschetzLabel, desc: &AbelianDescriptor) -> Result<CoreInfo> {
    let s = setup(desc)?;
    check_label(&s, label)?;
    let levels = branch_for(&s, label)?;
    let mults = cohomology_multiplicities(&s)?;
    core_for(label, &levels, mults.get(label))
}

fn core_for(label: &LefschetzLabel, levels: &[Level], cohom_mult: Option<&BigInt>) -> Result<CoreInfo> {
    let algebra = match label {
        LefschetzLabel::Classical(_) => CoreAlgebra::Rationals,
        LefschetzLabel::TotallyReal(o) => CoreAlgebra::Field { degree: o.orbit_size },
        LefschetzLabel::Quaternion(l) if l.a % 2 == 0 => CoreAlgebra::Rationals,
        LefschetzLabel::Quaternion(_) => CoreAlgebra::Quaternion,
    };
    // Rational dimension of V_ψ^e: quaternion levels count one Q̄-copy of Γ.
    let copies_over_q = match label {
        LefschetzLabel::Quaternion(_) => absolute_copies(label) as u64,
        _ => 1,
    };
    let b = algebra.rational_dimension() as u64;
    let copies_per_level = levels
        .iter()
        .map(|l| {
            let q_dim = l.dim.to_u64().expect("small dimension") * copies_over_q;
            if q_dim % b != 0 {
                return Err(Error::Verification(format!(
                    "level {} of {label} has rational dimension {q_dim}, not divisible by dim B = {b}",
                    l.level
                )));
            }
            Ok(q_dim / b)
        })
        .collect::<Result<Vec<_>>>()?;
    let shape = copies_per_level
        .iter()
        .enumerate()
        .map(|(j, &c)| {
            let p = if j == 0 { "P".to_string() } else { format!("P(−{j})") };
            if c == 1 {
                p
            } else {
                format!("{p}⊕{c}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ");
    // H(R_ψ) ⊗ Q̄ is c̄ copies of each distinct Q̄-irreducible, and R_ψ ≅ P ⊗_B V_ψ.
    let rank = cohom_mult.map(|c| {
        let q_dim_v: u64 = copies_per_level.iter().sum::<u64>() * b;
        let cohom_dim = c.to_u64().expect("small multiplicity") * abstract_dimension(label).to_u64().expect("small");
        cohom_dim * b / q_dim_v
    });
    Ok(CoreInfo {
        algebra,
        primitive_copies: copies_per_level.first().copied().unwrap_or(0),
        copies_per_level,
        shape,
        rank,
    })
}

/// Character of ΛH¹ in g₀-torus coordinates μ = h − (H¹ weight), summed over all degrees.
pub fn cohomology_character(s: &FamilySetup) -> Result<LaurentCharacter> {
    let rank = s.torus_rank();
    let m = 2 * s.h;
    let mut h1 = LaurentCharacter::zero(rank);
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        h1.add_term(e, BigInt::from(m));
    }
    let mut total = LaurentCharacter::zero(rank);
    for piece in exterior_algebra_characters(&h1)? {
        total = &total + &piece;
    }
    Ok(total.map_exponents(rank, |e| e.iter().map(|&w| s.h - w).collect()))
}

/// Multiplicity c̄ of each component's Q̄-irreducible in cohomology, by
/// highest-weight peeling of [`cohomology_character`].
pub fn cohomology_multiplicities(s: &FamilySetup) -> Result<BTreeMap<LefschetzLabel, BigInt>> {
    let mut rem = cohomology_character(s)?;
    let mut abs: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
        if c.is_negative() {
            return Err(Error::NotACharacter(format!("negative multiplicity at {e:?}")));
        }
        let chi = absolute_character(s, &e)?;
        rem = &rem - &chi.scale(&c);
        abs.insert(e, c);
    }
    let mut out = BTreeMap::new();
    for (hw, c) in abs {
        let label = match s.family {
            LefschetzFamily::Classical => LefschetzLabel::Classical(hw[0] as u32),
            LefschetzFamily::TotallyReal => {
                let o = tr_orbit(s, &hw)?;
                if let Some(prev) = out.get(&LefschetzLabel::TotallyReal(o.clone())) {
                    if prev != &c {
                        return Err(Error::Verification(format!(
                            "multiplicities differ along the Γ-orbit of {hw:?}"
                        )));
                    }
                }
                LefschetzLabel::TotallyReal(o)
            }
            LefschetzFamily::QuaternionIndefinite => {
                LefschetzLabel::Quaternion(SpFourIrrepLabel::new((hw[0] - hw[1]) as u32, hw[1] as u32))
            }
        };
        out.insert(label, c);
    }
    Ok(out)
}

fn levels_symmetric(levels: &[Level]) -> bool {
    let dims: BTreeMap<i64, &BigInt> = levels.iter().map(|l| (l.level, &l.dim)).collect();
    dims.iter().all(|(e, d)| dims.get(&-e) == Some(d))
}

/// Label of ψ∘ι⁻¹. For the supported families this is ψ itself once the
/// branching is seen to be ħ-symmetric.
pub fn fourier_image(label: &LefschetzLabel, desc: &AbelianDescriptor) -> Result<LefschetzLabel> {
    let s = setup(desc)?;
    check_label(&s, label)?;
    if !levels_symmetric(&branch_for(&s, label)?) {
        return Err(Error::Verification(format!("branching of {label} is not ħ-symmetric")));
    }
    Ok(label.clone())
}

fn unique_through_degree(desc: &AbelianDescriptor, degree: u64) -> Result<LefschetzLabel> {
    let hits: Vec<LefschetzLabel> = refined_table(desc)?
        .into_iter()
        .filter(|(_, t)| t.contains_key(&degree))
        .map(|(l, _)| l)
        .collect();
    match hits.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::Verification(format!(
            "expected exactly one component through degree {degree}, found {}",
            hits.len()
        ))),
    }
}

/// The component reaching degree 0.
pub fn algebraic_part(desc: &AbelianDescriptor) -> Result<LefschetzLabel> {
    unique_through_degree(desc, 0)
}

/// The component reaching degree 1; its depth is g − 1.
pub fn odd_part(desc: &AbelianDescriptor) -> Result<LefschetzLabel> {
    let l = unique_through_degree(desc, 1)?;
    let m = depth(&l, desc)?;
    if m + 1 != desc.g {
        return Err(Error::Verification(format!("odd part {l} has depth {m}, expected g − 1")));
    }
    Ok(l)
}

/// Closed-form dimension of V_ψ ⊗ Q̄ over Q̄.
pub fn abstract_dimension(label: &LefschetzLabel) -> BigInt {
    match label {
        LefschetzLabel::Classical(k) => BigInt::from(k + 1),
        LefschetzLabel::TotallyReal(o) => {
            BigInt::from(o.orbit_size) * bs(o).iter().map(|&b| BigInt::from(b + 1)).product::<BigInt>()
        }
        LefschetzLabel::Quaternion(l) => sp4_dimension(*l),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub psi: LefschetzLabel,
    pub depth: u32,
    pub levels: Vec<Level>,
    pub refined: BTreeMap<u64, Vec<ProductClass>>,
    pub core: CoreInfo,
    pub fourier_fixed: bool,
    /// Multiplicity of the Q̄-irreducible of V_ψ in cohomology.
    #[serde(serialize_with = "ser_bigint")]
    pub realization_mult: BigInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzReport {
    pub descriptor: DescriptorEcho,
    pub family: LefschetzFamily,
    pub h: i64,
    pub components: Vec<ComponentReport>,
    pub algebraic_part: LefschetzLabel,
    pub odd_part: LefschetzLabel,
    pub notes: Vec<String>,
}

pub fn lefschetz_report(desc: &AbelianDescriptor) -> Result<LefschetzReport> {
    let s = setup(desc)?;
    let mults = cohomology_multiplicities(&s)?;
    let labels = components_for(&s)?;
    let mut components = Vec::with_capacity(labels.len());
    for label in labels {
        let levels = branch_for(&s, &label)?;
        let depth = depth_for(&s, &label, &levels)?;
        let refined = refined_for(&s, &label, &levels)?;
        let mult = mults.get(&label).cloned().unwrap_or_else(BigInt::zero);
        let core = core_for(&label, &levels, Some(&mult))?;
        components.push(ComponentReport {
            fourier_fixed: levels_symmetric(&levels),
            psi: label,
            depth,
            levels,
            refined,
            core,
            realization_mult: mult,
        });
    }
    for (label, c) in &mults {
        if !c.is_zero() && !components.iter().any(|r| &r.psi == label) {
            return Err(Error::Verification(format!(
                "cohomology contains {label}, which is not an enumerated component"
            )));
        }
    }
    let mut notes = Vec::new();
    if s.family == LefschetzFamily::QuaternionIndefinite {
        let all = components.iter().all(|c| c.realization_mult.is_positive());
        notes.push(format!(
            "the bound a+b ≤ h is necessary; sufficiency {} in the cohomological realization",
            if all { "verified" } else { "FAILS" }
        ));
    }
    Ok(LefschetzReport {
        descriptor: DescriptorEcho::new(desc)?,
        family: s.family,
        h: s.h,
        algebraic_part: algebraic_part(desc)?,
        odd_part: odd_part(desc)?,
        components,
        notes,
    })
}
