//! Howell-form operations checked against element-level enumeration.

use std::collections::BTreeSet;

use ideal_homology::linalg::{
    quotient_invariants, ElementVector, GroupHom, OrderVector, SubgroupBasis, Subquotient,
};
use proptest::prelude::*;

const DIVISORS: [u64; 6] = [2, 3, 4, 6, 8, 12];

fn ambient() -> impl Strategy<Value = OrderVector> {
    prop::collection::vec(prop::sample::select(DIVISORS.to_vec()), 0..4)
        .prop_filter("small enough to enumerate", |v| v.iter().product::<u64>() <= 64)
        .prop_map(|v| OrderVector::new(v).unwrap())
}

fn element(a: &OrderVector) -> impl Strategy<Value = ElementVector> {
    let orders = a.orders().to_vec();
    orders
        .into_iter()
        .map(|d| 0..d)
        .collect::<Vec<_>>()
        .prop_map(ElementVector::new)
}

fn ambient_with_gens() -> impl Strategy<Value = (OrderVector, Vec<ElementVector>, Vec<ElementVector>)> {
    ambient().prop_flat_map(|a| {
        let g1 = prop::collection::vec(element(&a), 0..4);
        let g2 = prop::collection::vec(element(&a), 0..4);
        (Just(a), g1, g2)
    })
}

/// Span by closure under addition.
fn span(a: &OrderVector, gens: &[ElementVector]) -> BTreeSet<ElementVector> {
    let mut set: BTreeSet<ElementVector> = BTreeSet::from([a.zero()]);
    let mut frontier = vec![a.zero()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = a.add(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn members(s: &SubgroupBasis) -> BTreeSet<ElementVector> {
    s.ambient().elements().filter(|x| s.contains(x).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn howell_matches_span((a, g, _) in ambient_with_gens()) {
        let s = SubgroupBasis::howell_form(&g, &a).unwrap();
        prop_assert_eq!(members(&s), span(&a, &g));
        prop_assert_eq!(s.order(), span(&a, &g).len() as u128);
        let mut elems = s.elements();
        elems.sort();
        prop_assert_eq!(elems.into_iter().collect::<BTreeSet<_>>(), span(&a, &g));
    }

    #[test]
    fn howell_is_canonical((a, g, _) in ambient_with_gens(), seed in any::<u64>()) {
        let s = SubgroupBasis::howell_form(&g, &a).unwrap();
        let mut shuffled = g.clone();
        let n = shuffled.len();
        if n > 1 {
            shuffled.rotate_left((seed as usize) % n);
            let extra = a.add(&shuffled[0], &a.scale(seed % 7, &shuffled[n - 1]));
            shuffled.push(extra);
        }
        let t = SubgroupBasis::howell_form(&shuffled, &a).unwrap();
        prop_assert_eq!(&s, &t);
        let again = SubgroupBasis::howell_form(s.rows(), &a).unwrap();
        prop_assert_eq!(&s, &again);
    }

    #[test]
    fn sum_and_intersection_match_sets((a, g1, g2) in ambient_with_gens()) {
        let s = SubgroupBasis::howell_form(&g1, &a).unwrap();
        let t = SubgroupBasis::howell_form(&g2, &a).unwrap();
        let (ms, mt) = (members(&s), members(&t));
        let inter: BTreeSet<_> = ms.intersection(&mt).cloned().collect();
        prop_assert_eq!(members(&s.intersect(&t).unwrap()), inter);
        let mut both = g1.clone();
        both.extend(g2.iter().cloned());
        prop_assert_eq!(members(&s.sum(&t).unwrap()), span(&a, &both));
        prop_assert_eq!(s.intersect(&t).unwrap(), t.intersect(&s).unwrap());
        prop_assert_eq!(s.sum(&t).unwrap(), t.sum(&s).unwrap());
        prop_assert!(s.is_subgroup_of(&s.sum(&t).unwrap()).unwrap());
        prop_assert_eq!(s.intersect(&s).unwrap(), s.clone());
        prop_assert_eq!(s.sum(&s).unwrap(), s);
    }

    #[test]
    fn kernel_and_image_match_enumeration(
        (src, tgt, cols) in (ambient(), ambient()).prop_flat_map(|(s, t)| {
            let cols = prop::collection::vec(element(&t), s.rank());
            (Just(s), Just(t), cols)
        })
    ) {
        // force well-definedness: scale each column by t_exp / gcd so d_i kills it
        let cols: Vec<ElementVector> = cols
            .iter()
            .zip(src.orders())
            .map(|(c, &d)| {
                let e = tgt.exponent();
                let g = gcd(d, e);
                tgt.scale(e / g, c)
            })
            .collect();
        let h = GroupHom::new(src.clone(), tgt.clone(), cols).unwrap();
        let ker: BTreeSet<_> = src.elements().filter(|x| h.apply(x).is_zero()).collect();
        prop_assert_eq!(members(&h.kernel()), ker);
        let img: BTreeSet<_> = src.elements().map(|x| h.apply(&x)).collect();
        prop_assert_eq!(members(&h.image()), img.clone());
        for y in tgt.elements() {
            let sol = h.solve(&y).unwrap();
            prop_assert_eq!(sol.is_some(), img.contains(&y));
            if let Some(x) = sol {
                prop_assert_eq!(h.apply(&x), y);
            }
        }
    }

    #[test]
    fn quotient_invariants_match_coset_counting((a, g, _) in ambient_with_gens()) {
        let s = SubgroupBasis::howell_form(&g, &a).unwrap();
        let inv = quotient_invariants(&a, &s).unwrap();
        let f = inv.factors();
        for w in f.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        prop_assert!(f.iter().all(|&x| x >= 2));
        // |{cosets c : k·c = 0}| = ∏ gcd(k, f_j) determines the group
        let sub = members(&s);
        let index = a.group_order() / sub.len() as u128;
        prop_assert_eq!(inv.group_order(), index);
        for k in 1..=a.exponent() {
            let killed = a.elements().filter(|x| sub.contains(&a.scale(k, x))).count() as u128;
            let expected: u128 = f.iter().map(|&fj| gcd(k, fj) as u128).product();
            prop_assert_eq!(killed / sub.len() as u128, expected);
        }
        let zero = quotient_invariants(&a, &SubgroupBasis::zero(&a)).unwrap();
        prop_assert_eq!(zero.group_order(), a.group_order());
    }

    #[test]
    fn subquotient_projection_is_a_homomorphism((a, g1, g2) in ambient_with_gens()) {
        let num_gens: Vec<ElementVector> = g1.iter().chain(g2.iter()).cloned().collect();
        let num = SubgroupBasis::howell_form(&num_gens, &a).unwrap();
        let den = SubgroupBasis::howell_form(&g2, &a).unwrap();
        let sq = Subquotient::new(num.clone(), den.clone()).unwrap();
        let q = sq.orders().clone();
        let elems = num.elements();
        for x in elems.iter().take(16) {
            for y in elems.iter().take(16) {
                let lhs = sq.project(&a.add(x, y)).unwrap();
                let rhs = q.add(&sq.project(x).unwrap(), &sq.project(y).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
            let px = sq.project(x).unwrap();
            prop_assert_eq!(px.is_zero(), den.contains(x).unwrap());
        }
        prop_assert_eq!(sq.invariants().group_order() * den.order(), num.order());
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}
