#![allow(dead_code)]

use motdec_core::weight_lattice::{
    AbelianDescriptor, BrauerTag, InvolutionTag, Permutation, PermutationGroup, SimpleFactorDescriptor,
};
use proptest::prelude::*;

fn rotation(n: usize) -> Vec<Permutation> {
    if n < 2 {
        Vec::new()
    } else {
        vec![(0..n).map(|i| (i + 1) % n).collect()]
    }
}

/// Transitive Galois actions on n points: cyclic, full symmetric, and for n = 4 the Klein group.
pub fn galois(n: usize) -> BoxedStrategy<Vec<Permutation>> {
    let mut options = vec![rotation(n), PermutationGroup::symmetric_generators(n)];
    if n == 4 {
        options.push(vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]);
    }
    proptest::sample::select(options).boxed()
}

pub fn factor(n: usize, d: usize) -> BoxedStrategy<SimpleFactorDescriptor> {
    galois(n)
        .prop_flat_map(move |gens| {
            let cm = n.is_multiple_of(2);
            (Just(gens), any::<bool>().prop_map(move |b| b && cm))
        })
        .prop_map(move |(gens, cm)| {
            let brauer = match (d, n) {
                (1, _) => BrauerTag::Split,
                (2, 1) => BrauerTag::QuaternionIndefinite,
                _ => BrauerTag::Unspecified,
            };
            let involution = if cm { InvolutionTag::Cm } else { InvolutionTag::TotallyReal };
            let mut f = SimpleFactorDescriptor::new(n, d, gens, brauer, involution);
            if cm {
                // pairs embeddings 2i and 2i+1
                f.conjugation = Some((0..n).map(|i| i ^ 1).collect());
            }
            f
        })
        .boxed()
}

/// Simple descriptors with n ≤ 4, d ≤ 2, g ≤ max_g and nd | 2g.
pub fn descriptor(max_g: u32) -> BoxedStrategy<AbelianDescriptor> {
    (1usize..=4, 1usize..=2, 1u32..=max_g)
        .prop_filter("nd | 2g", |(n, d, g)| (2 * *g as usize).is_multiple_of(n * d))
        .prop_flat_map(|(n, d, g)| (factor(n, d), Just(g)))
        .prop_map(|(f, g)| AbelianDescriptor::simple(f, g).unwrap())
        .boxed()
}
