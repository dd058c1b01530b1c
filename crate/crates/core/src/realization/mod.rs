//! Exterior-algebra model of H* of an abelian variety with extra
//! endomorphisms, with exact operator identities and character oracles.

pub mod algebra;
pub mod compare;
pub mod graded;
pub mod linalg;
pub mod operators;
pub mod sparse;
pub mod verify;

pub use algebra::{build_realization, preset_for, preset_kind, AlgebraPreset, PresetKind, MAX_REALIZATION_G};
pub use compare::{compare_predictions, primitive_dimension, ComparisonReport};
pub use graded::{
    binomial_string_count, graded_character, graded_multiplicities, string_counts, xi_multiplicities,
    GradedMultiplicities, StringCount, XiCount,
};
pub use operators::{build_operators, OperatorSet};
pub use sparse::ExtOp;
pub use verify::{trace_pairing_check, verify, verify_relations, VerificationReport};
