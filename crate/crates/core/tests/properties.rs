//! Cross-module properties exercised through the public API only.

use proptest::prelude::*;

use chevalley_core::chevalley::{two_colorings, Pivot};
use chevalley_core::group::{enumerate_generated, enumerate_group, field_generators, x_alpha_gen, BfsOptions};
use chevalley_core::{AdjointModel, ChevalleyBasis, Matrix, PrimeField, Ring, RootSystem};

const SMALL_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"];

fn basis(t: &str) -> ChevalleyBasis {
    let model = AdjointModel::from_designation(t).unwrap();
    let (eps, _) = two_colorings(model.root_system().cartan()).unwrap();
    ChevalleyBasis::build(&model, &eps).unwrap()
}

#[test]
fn pivot_choice_does_not_change_the_basis() {
    for t in SMALL_TYPES {
        let model = AdjointModel::from_designation(t).unwrap();
        for eps in <[_; 2]>::from(two_colorings(model.root_system().cartan()).unwrap()) {
            let a = ChevalleyBasis::build_with_pivot(&model, &eps, Pivot::Smallest).unwrap();
            let b = ChevalleyBasis::build_with_pivot(&model, &eps, Pivot::Largest).unwrap();
            assert_eq!(a.elements(), b.elements(), "{t} {eps}");
        }
    }
}

#[test]
fn every_element_has_determinant_one_and_order_dividing_the_group() {
    let field = PrimeField::new(3).unwrap();
    let model = AdjointModel::from_designation("A1").unwrap();
    let g = enumerate_group(&model, &field, BfsOptions::default()).unwrap();
    let n = g.order() as u64;
    for x in g.elements() {
        assert_eq!(x.det_field(&field).unwrap(), field.one());
        assert!(x.pow(n, &field).is_identity(&field));
    }
}

#[test]
fn root_elements_of_the_highest_root_lie_in_the_group() {
    let field = PrimeField::new(3).unwrap();
    let b = basis("A2");
    let g = enumerate_group(b.model(), &field, BfsOptions::default()).unwrap();
    let rs = b.root_system();
    for alpha in [rs.highest_root().clone(), rs.highest_root().neg()] {
        for t in 0..3u32 {
            let x = x_alpha_gen(&b, &alpha, &t, &field).unwrap();
            assert!(g.contains(&x), "x_{alpha}({t})");
        }
    }
}

#[test]
fn parallel_and_sequential_enumerations_agree() {
    let field = PrimeField::new(2).unwrap();
    let model = AdjointModel::from_designation("B2").unwrap();
    let seq = enumerate_group(&model, &field, BfsOptions::default()).unwrap();
    let par = enumerate_group(
        &model,
        &field,
        BfsOptions {
            parallel: true,
            ..BfsOptions::default()
        },
    )
    .unwrap();
    assert_eq!(seq.elements(), par.elements());
    let mut a = Vec::new();
    seq.dump(&mut a).unwrap();
    let mut b = Vec::new();
    par.dump(&mut b).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn group_does_not_depend_on_generator_order(seed in any::<u64>()) {
        let field = PrimeField::new(3).unwrap();
        let model = AdjointModel::from_designation("A1").unwrap();
        let mut gens = field_generators(&model, &field);
        let k = gens.len();
        for i in (1..k).rev() {
            gens.swap(i, (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize);
        }
        let g = enumerate_generated(&gens, &field, BfsOptions::default()).unwrap();
        prop_assert_eq!(g.order(), 12);
    }

    #[test]
    fn root_elements_are_unipotent_homomorphisms(t_idx in 0usize..6, s in 0u32..5, u in 0u32..5) {
        let t = ["A2", "B2", "G2", "A3", "B3", "C3"][t_idx];
        let field = PrimeField::new(5).unwrap();
        let b = basis(t);
        let rs: &RootSystem = b.root_system();
        for alpha in rs.roots() {
            let xs = x_alpha_gen(&b, alpha, &s, &field).unwrap();
            let xu = x_alpha_gen(&b, alpha, &u, &field).unwrap();
            let sum = field.add(&s, &u);
            let xsu = x_alpha_gen(&b, alpha, &sum, &field).unwrap();
            prop_assert_eq!(xs.mul(&xu, &field), xsu);
            let id: Matrix<u32> = Matrix::identity(xs.rows(), &field);
            let diff = xs.sub(&id, &field);
            prop_assert!(diff.is_nilpotent(&field));
        }
    }
}
