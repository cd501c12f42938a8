use super::*;
use crate::examples::{free_xab, module_z4};
use crate::lincat::{build_module_category, ModuleModel};
use crate::linalg::InvariantFactors;

fn obj(cat: &FiniteLinearCategory, name: &str) -> ObjectId {
    cat.object(name).unwrap()
}

fn mult(cat: &FiniteLinearCategory, a: &str, b: &str, coords: &[i64]) -> Morphism {
    cat.morphism_from_ints(obj(cat, a), obj(cat, b), coords).unwrap()
}

/// `0 → Z2 → Z4 → Z2 → 0` in degrees 2, 1, 0.
fn ses(cat: &FiniteLinearCategory) -> ChainComplex {
    let incl = mult(cat, "Z2", "Z4", &[1]);
    let can = mult(cat, "Z4", "Z2", &[1]);
    ChainComplex::new(0, vec![obj(cat, "Z2"), obj(cat, "Z4"), obj(cat, "Z2")], vec![can, incl]).unwrap()
}

fn doubling(cat: &FiniteLinearCategory) -> ChainComplex {
    let z4 = obj(cat, "Z4");
    ChainComplex::new(0, vec![z4, z4], vec![mult(cat, "Z4", "Z4", &[2])]).unwrap()
}

fn inv(v: &[u64]) -> InvariantFactors {
    InvariantFactors::from_cyclic_orders(v)
}

#[test]
fn complex_validation() {
    let model = module_z4();
    let c = model.category();
    let z4 = obj(c, "Z4");
    let zero = c.zero_morphism(z4, z4);
    let two = mult(c, "Z4", "Z4", &[2]);
    let cz = ChainComplex::new(0, vec![z4, z4, z4], vec![zero.clone(), zero]).unwrap();
    assert!(validate_complex(c, &cz).unwrap().is_valid());
    let c2 = ChainComplex::new(0, vec![z4, z4, z4], vec![two.clone(), two]).unwrap();
    assert!(validate_complex(c, &c2).unwrap().is_valid());
    let z2 = obj(c, "Z2");
    let id = c.identity(z2);
    let bad = ChainComplex::new(0, vec![z2, z2, z2], vec![id.clone(), id]).unwrap();
    assert_eq!(validate_complex(c, &bad).unwrap().failures, vec![1]);
    assert!(matches!(right_homology(c, &bad, 1), Err(Error::InvalidComplex(_))));
    assert!(ChainComplex::new(0, vec![z4, z2], vec![mult(c, "Z4", "Z2", &[1])]).is_err());
}

#[test]
fn three_conditions() {
    let model = module_z4();
    let c = model.category();
    let (incl, can) = (mult(c, "Z2", "Z4", &[1]), mult(c, "Z4", "Z2", &[1]));
    assert_eq!(complex_conditions(c, &can, &incl).unwrap(), [true; 3]);
    let id = c.identity(obj(c, "Z4"));
    assert_eq!(complex_conditions(c, &id, &id).unwrap(), [false; 3]);
    let z = c.zero_morphism(obj(c, "Z2"), obj(c, "Z4"));
    assert_eq!(complex_conditions(c, &can, &z).unwrap(), [true; 3]);
    assert!(complex_conditions(c, &incl, &incl).is_err());
}

#[test]
fn homology_examples() {
    let model = module_z4();
    let c = model.category();
    let z2 = obj(c, "Z2");
    let single = ChainComplex::concentrated(z2, 0);
    let h = right_homology(c, &single, 0).unwrap();
    for x in c.objects() {
        assert_eq!(h.family.invariants(x), inv(c.hom(x, z2).orders()));
    }
    let d = doubling(c);
    assert_eq!(right_homology_at(c, &d, 0, obj(c, "Z4")).unwrap().invariants(), inv(&[2]));
    assert_eq!(right_homology_at(c, &d, 1, obj(c, "Z4")).unwrap().invariants(), inv(&[2]));
    assert!(matches!(right_homology(c, &d, 2), Err(Error::DegreeOutOfRange(2))));
    let s = ses(c);
    for n in s.degrees() {
        assert!(right_homology(c, &s, n).unwrap().family.is_trivial());
        assert!(left_homology(c, &s, n).unwrap().family.is_trivial());
    }
    assert!(is_exact(c, &s).unwrap());
    assert!(!is_exact(c, &d).unwrap());
    assert!(right_homology(c, &d, 0).unwrap().family.check_functoriality().unwrap());
    assert!(left_homology(c, &d, 1).unwrap().family.check_functoriality().unwrap());
}

#[test]
fn free_xab_sequence() {
    let c = free_xab();
    let (x, a, b) = (obj(&c, "x"), obj(&c, "a"), obj(&c, "b"));
    let j = c.basis_morphism(a, b, 0);
    let seq = ChainComplex::new(0, vec![b, a], vec![j.clone()]).unwrap();
    assert!(is_exact(&c, &seq).unwrap());
    let r = hom_left_sequences(&c, &j, None, x).unwrap();
    assert!(r.covariant_injective);
    assert!(!r.covariant_middle_exact);
    assert_eq!(r.ranks, [1, 2, 0]);
    let vac = hom_left_sequences(&c, &j, None, b).unwrap();
    assert!(vac.covariant_injective);
    assert_eq!(vac.ranks[0], 0);
    let (ideal, pointwise) = im_vs_pointwise_image(&c, &j, x);
    assert_eq!((ideal.order(), pointwise.order()), (16, 4));
    assert!(ideal.is_full());
    let jp = c.compose(&j, &c.basis_morphism(x, a, 0)).unwrap();
    assert!(pointwise.contains(jp.coords()).unwrap());
}

#[test]
fn module_hom_sequences() {
    let model = module_z4();
    let c = model.category();
    let (incl, can) = (mult(c, "Z2", "Z4", &[1]), mult(c, "Z4", "Z2", &[1]));
    let r = hom_left_sequences(c, &incl, Some(&can), obj(c, "Z4")).unwrap();
    assert!(r.covariant_injective && r.covariant_middle_exact && r.covariant_right_exact);
    assert!(r.contravariant_injective && r.contravariant_middle_exact);
    let not_exact = hom_left_sequences(c, &incl, None, obj(c, "Z4"));
    assert!(matches!(not_exact, Err(Error::NotExact(_))));
    for x in [obj(c, "Z4"), obj(c, "Z4+Z4")] {
        for f in c.all_basis_morphisms() {
            let (i, p) = im_vs_pointwise_image(c, &f, x);
            assert_eq!(i, p);
        }
    }
    let id = c.identity(obj(c, "Z2+Z4"));
    let (i, p) = im_vs_pointwise_image(c, &id, obj(c, "Z2"));
    assert!(i.is_full() && p.is_full());
}

#[test]
fn induced_maps() {
    let model = module_z4();
    let c = model.category();
    let d = doubling(c);
    let id = ChainMap::identity(c, &d);
    for n in d.degrees() {
        for (x, h) in c.objects().zip(induced_map(c, &id, n).unwrap()) {
            assert_eq!(h, GroupHom::identity(right_homology_at(c, &d, n, x).unwrap().orders()));
        }
        assert!(induced_map(c, &ChainMap::zero(c, &d, &d), n).unwrap().iter().all(GroupHom::is_zero));
    }
    // multiplication by 3 and by 2 commute with ·2
    let three = ChainMap::new(
        c,
        d.clone(),
        d.clone(),
        [(0, mult(c, "Z4", "Z4", &[3])), (1, mult(c, "Z4", "Z4", &[3]))].into_iter().collect(),
    )
    .unwrap();
    let two = ChainMap::new(
        c,
        d.clone(),
        d.clone(),
        [(0, mult(c, "Z4", "Z4", &[2])), (1, mult(c, "Z4", "Z4", &[2]))].into_iter().collect(),
    )
    .unwrap();
    let comp = three.compose(c, &two).unwrap();
    for n in d.degrees() {
        let (a, b, ab) = (
            induced_map(c, &three, n).unwrap(),
            induced_map(c, &two, n).unwrap(),
            induced_map(c, &comp, n).unwrap(),
        );
        for k in 0..a.len() {
            assert_eq!(a[k].compose(&b[k]).unwrap(), ab[k]);
        }
    }
    let bad = ChainMap::new(c, d.clone(), d.clone(), [(0, c.identity(obj(c, "Z4")))].into_iter().collect());
    assert!(matches!(bad, Err(Error::InvalidChainMap(_))));
}

#[test]
fn homotopies() {
    let model = build_module_category(2, &[("F1", vec![2])]).unwrap();
    let c = model.category();
    let v = ObjectId(0);
    let contractible = ChainComplex::new(0, vec![v, v], vec![c.identity(v)]).unwrap();
    let id = ChainMap::identity(c, &contractible);
    let zero = ChainMap::zero(c, &contractible, &contractible);
    let s = are_homotopic(c, &id, &zero).unwrap().unwrap();
    assert!(verify_homotopy(c, &id, &zero, &s).unwrap());
    assert!(are_homotopic(c, &id, &id).unwrap().is_some());
    let flat = ChainComplex::new(0, vec![v, v], vec![c.zero_morphism(v, v)]).unwrap();
    let idf = ChainMap::identity(c, &flat);
    assert!(are_homotopic(c, &idf, &ChainMap::zero(c, &flat, &flat)).unwrap().is_none());
}

fn distinct_complex(model: &ModuleModel) -> ChainComplex {
    let c = model.category();
    let (z2, z4, z24) = (obj(c, "Z2"), obj(c, "Z4"), obj(c, "Z2+Z4"));
    // Z2+Z4 --(1,2)--> Z4 --can--> Z2
    let d2 = c.morphism_from_ints(z24, z4, &[1, 2]).unwrap();
    let d1 = c.basis_morphism(z4, z2, 0);
    assert!(c.compose(&d1, &d2).unwrap().is_zero());
    ChainComplex::new(0, vec![z2, z4, z24], vec![d1, d2]).unwrap()
}

#[test]
fn global_ideals_match_per_degree() {
    let model = module_z4();
    let c = model.category();
    let cx = distinct_complex(&model);
    for n in cx.degrees() {
        let g = global_homology(c, &cx, n).unwrap();
        let h = right_homology(c, &cx, n).unwrap();
        for x in c.objects() {
            assert_eq!(g.group(x), h.family.group(x));
        }
    }
    let single = ChainComplex::concentrated(obj(c, "Z4"), 0);
    let (right, left) = global_ideals(c, &single);
    assert!(right.is_zero() && left.is_zero());
    assert_eq!(global_homology(c, &single, 0).unwrap().group(obj(c, "Z4")).invariants(), inv(&[4]));
}

#[test]
fn left_homology_is_right_homology_of_reversed() {
    let model = module_z4();
    let c = model.category();
    let op = c.opposite();
    for cx in [distinct_complex(&model), doubling(c), ses(c)] {
        let rev = cx.reversed(c);
        for n in cx.degrees() {
            let l = left_homology(c, &cx, n).unwrap();
            let r = right_homology(&op, &rev, -n).unwrap();
            for x in c.objects() {
                assert_eq!(l.family.group(x), r.family.group(x));
            }
        }
    }
}
