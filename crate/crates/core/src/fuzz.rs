//! Seeded random generation of morphisms, complexes, chain maps and ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::homology::{chain_map_from_coords, chain_map_group, ChainComplex, ChainMap, GradedLayout, Homotopy};
use crate::ideals::{principal_left, principal_right, saturate, Ideal, Side};
use crate::lincat::{FiniteLinearCategory, Morphism, ObjectId};
use crate::linalg::{ElementVector, OrderVector, SubgroupBasis};
use crate::Result;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random combination of the subgroup's Howell rows.
pub fn random_element<R: Rng>(rng: &mut R, sub: &SubgroupBasis) -> ElementVector {
    let amb = sub.ambient();
    let e = amb.exponent();
    let mut acc = amb.zero();
    for r in sub.rows() {
        acc = amb.add(&acc, &amb.scale(rng.gen_range(0..e.max(1)), r));
    }
    acc
}

pub fn random_vector<R: Rng>(rng: &mut R, orders: &OrderVector) -> ElementVector {
    ElementVector::new(orders.orders().iter().map(|&d| rng.gen_range(0..d)).collect())
}

pub fn random_object<R: Rng>(rng: &mut R, cat: &FiniteLinearCategory) -> ObjectId {
    ObjectId(rng.gen_range(0..cat.object_count()))
}

pub fn random_morphism<R: Rng>(rng: &mut R, cat: &FiniteLinearCategory, a: ObjectId, b: ObjectId) -> Morphism {
    cat.morphism(a, b, random_vector(rng, cat.hom(a, b))).expect("random coordinates are in range")
}

pub fn random_any_morphism<R: Rng>(rng: &mut R, cat: &FiniteLinearCategory) -> Morphism {
    let (a, b) = (random_object(rng, cat), random_object(rng, cat));
    random_morphism(rng, cat, a, b)
}

/// A complex with between 1 and `max_len` objects in degrees `0..len`, each
/// differential drawn from the kernel of post-composition with the previous.
pub fn random_complex<R: Rng>(rng: &mut R, cat: &FiniteLinearCategory, max_len: usize) -> ChainComplex {
    let len = rng.gen_range(1..=max_len.max(1));
    let objects: Vec<ObjectId> = (0..len).map(|_| random_object(rng, cat)).collect();
    let mut ds: Vec<Morphism> = Vec::new();
    for k in 1..len {
        let (x, y) = (objects[k], objects[k - 1]);
        let allowed = match ds.last() {
            None => SubgroupBasis::full(cat.hom(x, y)),
            Some(prev) => cat.post_compose_hom(prev, x).kernel(),
        };
        // bias towards nonzero differentials
        let mut v = random_element(rng, &allowed);
        for _ in 0..3 {
            if !v.is_zero() {
                break;
            }
            v = random_element(rng, &allowed);
        }
        ds.push(cat.morphism(x, y, v).expect("kernel element lies in Hom"));
    }
    ChainComplex::new(0, objects, ds).expect("differentials have matching endpoints")
}

pub fn random_chain_map<R: Rng>(
    rng: &mut R,
    cat: &FiniteLinearCategory,
    c: &ChainComplex,
    d: &ChainComplex,
) -> Result<ChainMap> {
    let (group, layout) = chain_map_group(cat, c, d)?;
    chain_map_from_coords(cat, c, d, &layout, &random_element(rng, &group))
}

pub fn random_homotopy<R: Rng>(rng: &mut R, cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex) -> Homotopy {
    let layout = GradedLayout::new(cat, c, d, 1);
    layout.split(cat, &random_vector(rng, &layout.orders))
}

/// Principal one-sided ideals of random morphisms, or saturations of random
/// two-generator sets with a random side.
pub fn random_ideal<'c, R: Rng>(rng: &mut R, cat: &'c FiniteLinearCategory) -> Ideal<'c> {
    if rng.gen_bool(0.5) {
        let f = random_any_morphism(rng, cat);
        if rng.gen_bool(0.5) {
            principal_left(cat, &f)
        } else {
            principal_right(cat, &f)
        }
    } else {
        let side = *[Side::Left, Side::Right].choose(rng).expect("nonempty");
        let f = random_any_morphism(rng, cat);
        // share the anchored endpoint so the generators can interact
        let g = match side {
            Side::Left => {
                let b = random_object(rng, cat);
                random_morphism(rng, cat, f.source(), b)
            }
            _ => {
                let a = random_object(rng, cat);
                random_morphism(rng, cat, a, f.target())
            }
        };
        saturate(cat, side, &[f, g])
    }
}
