//! Algebraic invariants over seeded random inputs.

use proptest::prelude::*;

use ideal_homology::bridge::{classical_homology, is_projective, representability_check};
use ideal_homology::examples::{free_xab, matrix_f2, module_z4};
use ideal_homology::fuzz;
use ideal_homology::homology::{homotopy_boundary, induced_map, is_exact, verify_homotopy, ChainMap};
use ideal_homology::ideals::{left_annihilator, principal_left, principal_right, right_annihilator, saturate, Side};
use ideal_homology::lincat::{FiniteLinearCategory, ModuleModel};

fn models() -> [ModuleModel; 2] {
    [module_z4(), matrix_f2()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn annihilators_are_antitone(seed in any::<u64>()) {
        let model = module_z4();
        let cat = model.category();
        let mut rng = fuzz::rng(seed);
        let f = fuzz::random_any_morphism(&mut rng, cat);
        let z = fuzz::random_object(&mut rng, cat);
        let g = fuzz::random_morphism(&mut rng, cat, f.source(), z);
        // <f| ⊆ <f, g| at the same anchor
        let small = principal_left(cat, &f);
        let big = saturate(cat, Side::Left, &[f.clone(), g]);
        prop_assert!(small.is_subideal_of(&big));
        prop_assert!(right_annihilator(&big).is_subideal_of(&right_annihilator(&small)));
        let r = principal_right(cat, &f);
        prop_assert_eq!(left_annihilator(&right_annihilator(&left_annihilator(&r))), left_annihilator(&r));
    }

    #[test]
    fn composition_is_bilinear(seed in any::<u64>()) {
        for cat in [module_z4().into_category(), free_xab()] {
            let mut rng = fuzz::rng(seed);
            let (a, b, c) = (fuzz::random_object(&mut rng, &cat), fuzz::random_object(&mut rng, &cat), fuzz::random_object(&mut rng, &cat));
            let (f1, f2) = (fuzz::random_morphism(&mut rng, &cat, a, b), fuzz::random_morphism(&mut rng, &cat, a, b));
            let g = fuzz::random_morphism(&mut rng, &cat, b, c);
            let lhs = cat.compose(&g, &cat.add(&f1, &f2).unwrap()).unwrap();
            let rhs = cat.add(&cat.compose(&g, &f1).unwrap(), &cat.compose(&g, &f2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let h = fuzz::random_morphism(&mut rng, &cat, b, c);
            let lhs = cat.compose(&cat.add(&g, &h).unwrap(), &f1).unwrap();
            let rhs = cat.add(&cat.compose(&g, &f1).unwrap(), &cat.compose(&h, &f1).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn module_composition_matches_matrices(seed in any::<u64>()) {
        for model in models() {
            let cat = model.category();
            let mut rng = fuzz::rng(seed);
            let (a, b, c) = (fuzz::random_object(&mut rng, cat), fuzz::random_object(&mut rng, cat), fuzz::random_object(&mut rng, cat));
            let f = fuzz::random_morphism(&mut rng, cat, a, b);
            let g = fuzz::random_morphism(&mut rng, cat, b, c);
            let gf = cat.compose(&g, &f).unwrap();
            prop_assert_eq!(model.matrix(&gf), model.matrix(&g).compose(&model.matrix(&f)).unwrap());
            prop_assert_eq!(model.morphism_from_hom(a, c, &model.matrix(&gf)).unwrap(), gf);
        }
    }

    #[test]
    fn homotopic_maps_induce_equal_homology_maps(seed in any::<u64>()) {
        for cat in [module_z4().into_category(), free_xab()] {
            check_homotopy_invariance(&cat, seed)?;
        }
    }

    #[test]
    fn ideal_exactness_matches_classical(seed in any::<u64>()) {
        for model in models() {
            let cat = model.category();
            let mut rng = fuzz::rng(seed);
            let c = fuzz::random_complex(&mut rng, cat, 4);
            let classical = c.degrees().all(|n| classical_homology(&model, &c, n).unwrap().invariants.is_trivial());
            prop_assert_eq!(is_exact(cat, &c).unwrap(), classical);
            for p in cat.objects().filter(|&p| is_projective(&model, p)) {
                prop_assert!(representability_check(&model, &c, p).unwrap().all_match());
            }
        }
    }
}

fn check_homotopy_invariance(cat: &FiniteLinearCategory, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = fuzz::rng(seed);
    let c = fuzz::random_complex(&mut rng, cat, 3);
    let d = fuzz::random_complex(&mut rng, cat, 3);
    let f = fuzz::random_chain_map(&mut rng, cat, &c, &d).unwrap();
    let s = fuzz::random_homotopy(&mut rng, cat, &c, &d);
    let b = homotopy_boundary(cat, &c, &d, &s).unwrap();
    let g = f.add(cat, &b).unwrap();
    prop_assert!(verify_homotopy(cat, &g, &f, &s).unwrap());
    for n in c.degrees().filter(|&n| d.contains_degree(n)) {
        prop_assert_eq!(induced_map(cat, &f, n).unwrap(), induced_map(cat, &g, n).unwrap());
    }
    let zero = ChainMap::zero(cat, &c, &d);
    prop_assert!(verify_homotopy(cat, &b, &zero, &s).unwrap());
    Ok(())
}
