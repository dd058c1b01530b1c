use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::character::LaurentCharacter;
use super::gl::{decompose_gl, GLIrrepLabel};
use crate::error::Result;

/// Irreducible of sp₄ with highest weight a·ϖ₁ + b·ϖ₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpFourIrrepLabel {
    pub a: u32,
    pub b: u32,
}

impl SpFourIrrepLabel {
    pub fn new(a: u32, b: u32) -> Self {
        SpFourIrrepLabel { a, b }
    }

    /// Highest weight in the L₁, L₂ coordinates: ϖ₁ = L₁, ϖ₂ = L₁ + L₂.
    pub fn highest_weight(self) -> [i64; 2] {
        [(self.a + self.b) as i64, self.b as i64]
    }
}

impl fmt::Display for SpFourIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Signed permutations of two letters with their determinants.
fn weyl_group_c2() -> Vec<([usize; 2], [i64; 2], i64)> {
    let mut out = Vec::with_capacity(8);
    for (perm, psign) in [([0, 1], 1), ([1, 0], -1)] {
        for e0 in [1i64, -1] {
            for e1 in [1i64, -1] {
                out.push((perm, [e0, e1], psign * e0 * e1));
            }
        }
    }
    out
}

fn c2_alternant(v: [i64; 2]) -> LaurentCharacter {
    let mut out = LaurentCharacter::zero(2);
    for (perm, eps, sign) in weyl_group_c2() {
        out.add_term(vec![eps[0] * v[perm[0]], eps[1] * v[perm[1]]], BigInt::from(sign));
    }
    out
}

/// Weyl character formula for C₂ with ρ = (2, 1).
pub fn sp4_character(label: SpFourIrrepLabel) -> Result<LaurentCharacter> {
    let [l1, l2] = label.highest_weight();
    c2_alternant([l1 + 2, l2 + 1]).div_exact(&c2_alternant([2, 1]))
}

/// (a+1)(b+1)(a+b+2)(a+2b+3)/6.
pub fn sp4_dimension(label: SpFourIrrepLabel) -> BigInt {
    let (a, b) = (BigInt::from(label.a), BigInt::from(label.b));
    (&a + 1) * (&b + 1) * (&a + &b + 2) * (&a + 2 * &b + 3) / 6
}

/// Restriction to the Levi gl₂ sharing the maximal torus.
pub fn branch_sp4_to_gl2(label: SpFourIrrepLabel) -> Result<Vec<(GLIrrepLabel, BigInt)>> {
    decompose_gl(&sp4_character(label)?, 2)
}
