//! Weight tuples, Galois orbits, weights and duals.

pub mod descriptor;
pub mod group;
pub mod orbits;
pub mod weights;

pub use descriptor::{
    AbelianDescriptor, BrauerTag, FactorBlock, InvolutionTag, QuaternionParams,
    SimpleFactorDescriptor, MAX_CENTER_DEGREE,
};
pub use group::{Permutation, PermutationGroup};
pub use orbits::{
    adm_generating_function, box_weights, enumerate_adm_orbits, enumerate_factor_orbits,
    orbit_of, xadm_generating_function, OrbitClass, ProductClass,
};
pub use weights::{
    classify, dual_wdual, dual_with_convention, lefschetz_admissible, weight_of,
    DualityConvention, HalfWeightTuple, MultiWeight, WeightClass, WeightTuple,
};
