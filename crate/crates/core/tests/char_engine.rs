use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use motdec_core::char_engine::{
    branch_sp4_to_gl2, decompose_blocks, decompose_gl, exterior_power_character, gl_dimension, outer_product,
    schur_character, sp4_character, sp4_dimension, LaurentCharacter, SpFourIrrepLabel,
};
use motdec_core::lefschetz::xi_of_mu;
use motdec_core::weight_lattice::{MultiWeight, WeightTuple};

fn dominant(d: usize, lo: i64, hi: i64) -> impl Strategy<Value = WeightTuple> {
    proptest::collection::vec(lo..=hi, d).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        WeightTuple::new(v).unwrap()
    })
}

fn product(a: &LaurentCharacter, b: &LaurentCharacter) -> LaurentCharacter {
    a * b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_round_trip(lambda in (1usize..=3).prop_flat_map(|d| dominant(d, -2, 3))) {
        let d = lambda.len();
        let chi = schur_character(&lambda, d).unwrap();
        prop_assert_eq!(chi.dimension(), gl_dimension(&lambda));
        prop_assert!(chi.is_symmetric());
        prop_assert_eq!(decompose_gl(&chi, d).unwrap(), vec![(lambda, BigInt::from(1))]);
    }

    #[test]
    fn tensor_products_decompose(a in dominant(2, 0, 3), b in dominant(2, -1, 2)) {
        let chi = product(&schur_character(&a, 2).unwrap(), &schur_character(&b, 2).unwrap());
        let parts = decompose_gl(&chi, 2).unwrap();
        prop_assert!(parts.iter().all(|(_, c)| c > &BigInt::zero()));
        let total: BigInt = parts.iter().map(|(l, c)| c * gl_dimension(l)).sum();
        prop_assert_eq!(total, gl_dimension(&a) * gl_dimension(&b));
        let mut rebuilt = LaurentCharacter::zero(2);
        for (l, c) in &parts {
            rebuilt = &rebuilt + &schur_character(l, 2).unwrap().scale(c);
        }
        prop_assert_eq!(rebuilt, chi);
    }

    #[test]
    fn outer_products_split_by_block(a in dominant(2, 0, 2), b in dominant(1, -1, 2)) {
        let chi = outer_product(&schur_character(&a, 2).unwrap(), &schur_character(&b, 1).unwrap());
        let parts = decompose_blocks(&chi, &[2, 1]).unwrap();
        prop_assert_eq!(parts.len(), 1);
        prop_assert_eq!(&parts[0].0 .0, &vec![a, b]);
    }

    #[test]
    fn exterior_powers_have_binomial_dimension(d in 1usize..=4, i in 0i64..=5) {
        let std = schur_character(&WeightTuple::new([vec![1], vec![0; d - 1]].concat()).unwrap(), d).unwrap();
        let ext = exterior_power_character(&std, i).unwrap();
        let expected = if i as usize > d { 0 } else { num_integer::binomial(d as u64, i as u64) };
        prop_assert_eq!(ext.dimension(), BigInt::from(expected));
    }
}

#[test]
fn sp4_branching_closure() {
    for b in 0..=4u32 {
        for a in 0..=(8 - 2 * b) {
            let label = SpFourIrrepLabel::new(a, b);
            let chi = sp4_character(label).unwrap();
            assert_eq!(chi.dimension(), sp4_dimension(label), "({a},{b})");
            let branched: BigInt = branch_sp4_to_gl2(label)
                .unwrap()
                .iter()
                .map(|(l, c)| {
                    assert!(c > &BigInt::zero());
                    c * gl_dimension(l)
                })
                .sum();
            assert_eq!(branched, sp4_dimension(label), "({a},{b})");
        }
    }
}

fn branch(a: u32, b: u32) -> Vec<(Vec<i64>, i64)> {
    branch_sp4_to_gl2(SpFourIrrepLabel::new(a, b))
        .unwrap()
        .into_iter()
        .map(|(l, c)| (l.entries().to_vec(), i64::try_from(&c).unwrap()))
        .collect()
}

/// ξ of each constituent at h = 2, i.e. the refined summands of the component at g = 4.
fn xis(a: u32, b: u32) -> Vec<String> {
    let mut out: Vec<String> = branch(a, b)
        .into_iter()
        .map(|(mu, _)| xi_of_mu(&MultiWeight::from_rows(vec![mu]).unwrap(), 2).unwrap().to_string())
        .collect();
    out.sort();
    out
}

#[test]
fn branching_of_small_irreducibles() {
    let one = |v: &[&[i64]]| v.iter().map(|x| (x.to_vec(), 1)).collect::<Vec<_>>();
    assert_eq!(branch(1, 0), one(&[&[1, 0], &[0, -1]]));
    assert_eq!(branch(0, 1), one(&[&[1, 1], &[1, -1], &[-1, -1]]));
    assert_eq!(branch(2, 0), one(&[&[2, 0], &[1, -1], &[0, 0], &[0, -2]]));
    assert_eq!(branch(1, 1), one(&[&[2, 1], &[2, -1], &[1, 0], &[1, -2], &[0, -1], &[-1, -2]]));
    assert_eq!(branch(0, 2), one(&[&[2, 2], &[2, 0], &[2, -2], &[0, 0], &[0, -2], &[-2, -2]]));
}

#[test]
fn branching_matches_genus_four_refinement() {
    assert_eq!(xis(1, 0), ["(2,1)", "(3,2)"]);
    assert_eq!(xis(1, 1), ["(1,0)", "(2,1)", "(3,0)", "(3,2)", "(4,1)", "(4,3)"]);
    assert_eq!(xis(2, 0), ["(2,0)", "(2,2)", "(3,1)", "(4,2)"]);
    assert_eq!(xis(0, 1), ["(1,1)", "(3,1)", "(3,3)"]);
    assert_eq!(xis(0, 2), ["(0,0)", "(2,0)", "(2,2)", "(4,0)", "(4,2)", "(4,4)"]);
}
