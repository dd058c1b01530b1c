//! Exact index combinatorics, characters and an exterior-algebra realization
//! for motivic and Lefschetz decompositions of abelian schemes with extra
//! endomorphisms.

pub mod char_engine;
pub mod error;
pub mod lefschetz;
pub mod motivic;
pub mod realization;
pub mod weight_lattice;

pub use error::{Error, Result};
