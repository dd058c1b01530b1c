//! Laurent-polynomial characters for GL_d and Sp₄.

pub mod character;
pub mod gl;
pub mod sp4;

pub use character::{outer_product, Exponent, LaurentCharacter, MAX_RANK};
pub use gl::{
    block_dimension, block_schur_character, d_lambda, decompose_blocks, decompose_gl,
    exterior_algebra_characters, exterior_power_character, gl_dimension, multiplicity_of,
    schur_character, BlockLabel, DLambda, GLIrrepLabel,
};
pub use sp4::{branch_sp4_to_gl2, sp4_character, sp4_dimension, SpFourIrrepLabel};
