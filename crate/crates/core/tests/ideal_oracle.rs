//! Every ideal operation against naive element enumeration.

use ideal_homology::examples::{free_xab, matrix_f2, module_z4};
use ideal_homology::fuzz;
use ideal_homology::ideals::{Ideal, DEFAULT_ENUM_CAP};
use ideal_homology::lincat::{FiniteLinearCategory, Morphism};
use ideal_homology::oracle::cross_check;

fn sample(cat: &FiniteLinearCategory, extra: usize, seed: u64) -> Vec<Morphism> {
    let mut out = cat.all_basis_morphisms();
    let mut rng = fuzz::rng(seed);
    out.extend((0..extra).map(|_| fuzz::random_any_morphism(&mut rng, cat)));
    out
}

fn ideals(cat: &FiniteLinearCategory, n: usize, seed: u64) -> Vec<Ideal<'_>> {
    let mut rng = fuzz::rng(seed);
    (0..n).map(|_| fuzz::random_ideal(&mut rng, cat)).collect()
}

#[test]
fn free_xab_every_morphism() {
    let cat = free_xab();
    let all: Vec<Morphism> = cat
        .objects()
        .flat_map(|a| cat.objects().map(move |b| (a, b)))
        .flat_map(|(a, b)| cat.all_morphisms(a, b, DEFAULT_ENUM_CAP).unwrap())
        .collect();
    assert_eq!(cross_check(&cat, &all, &ideals(&cat, 16, 11), DEFAULT_ENUM_CAP).unwrap(), Vec::<String>::new());
}

#[test]
fn module_z4_sampled() {
    let model = module_z4();
    let cat = model.category();
    let bad = cross_check(cat, &sample(cat, 24, 3), &ideals(cat, 10, 12), DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(bad, Vec::<String>::new());
}

#[test]
fn matrix_f2_sampled() {
    let model = matrix_f2();
    let cat = model.category();
    let bad = cross_check(cat, &sample(cat, 24, 5), &ideals(cat, 10, 13), DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(bad, Vec::<String>::new());
}
