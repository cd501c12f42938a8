//! Naive element-level reference implementations of the ideal operations.
//! Everything here works on explicit sets of morphisms and never touches
//! subgroup bases, so it serves as an independent check.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::ideals::{
    coim, coker, common_morphisms, im, ker, left_annihilator, principal_left, principal_right, product,
    right_annihilator, saturate, Ideal, Side,
};
use crate::lincat::{FiniteLinearCategory, Morphism, ObjectId};

/// An ideal as explicit morphism sets per `(source, target)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveIdeal {
    pub side: Side,
    pub anchors: BTreeSet<ObjectId>,
    pub elements: Vec<BTreeSet<Morphism>>,
}

/// Every morphism of the category, grouped by pair.
pub struct Universe<'c> {
    cat: &'c FiniteLinearCategory,
    homs: Vec<Vec<Morphism>>,
    bases: Vec<Vec<Morphism>>,
}

impl<'c> Universe<'c> {
    pub fn new(cat: &'c FiniteLinearCategory, cap: u128) -> Result<Self> {
        let (mut homs, mut bases) = (Vec::new(), Vec::new());
        for a in cat.objects() {
            for b in cat.objects() {
                homs.push(cat.all_morphisms(a, b, cap)?);
                bases.push(cat.basis(a, b));
            }
        }
        Ok(Self { cat, homs, bases })
    }

    pub fn category(&self) -> &'c FiniteLinearCategory {
        self.cat
    }

    fn n(&self) -> usize {
        self.cat.object_count()
    }

    pub fn hom(&self, a: ObjectId, b: ObjectId) -> &[Morphism] {
        &self.homs[a.0 * self.n() + b.0]
    }

    /// Only zero morphisms, matching the library's zero components.
    fn empty(&self, side: Side, anchors: BTreeSet<ObjectId>) -> NaiveIdeal {
        let elements = self
            .cat
            .objects()
            .flat_map(|a| self.cat.objects().map(move |b| (a, b)))
            .map(|(a, b)| BTreeSet::from([self.cat.zero_morphism(a, b)]))
            .collect();
        NaiveIdeal { side, anchors, elements }
    }

    /// Closure of the generators under sums and the side's compositions,
    /// by a worklist over explicit elements. Composing with basis morphisms
    /// suffices since every morphism is a sum of them.
    pub fn saturate(&self, side: Side, anchors: BTreeSet<ObjectId>, generators: &[Morphism]) -> NaiveIdeal {
        let cat = self.cat;
        let n = self.n();
        let mut ideal = self.empty(side, anchors);
        let mut queue: VecDeque<Morphism> = VecDeque::new();
        for g in generators {
            if ideal.elements[g.source().0 * n + g.target().0].insert(g.clone()) {
                queue.push_back(g.clone());
            }
        }
        while let Some(f) = queue.pop_front() {
            let (a, b) = (f.source(), f.target());
            let mut new = Vec::new();
            for g in &ideal.elements[a.0 * n + b.0] {
                new.push(cat.add(&f, g).expect("same pair"));
            }
            if side.post_closed() {
                for z in cat.objects() {
                    for psi in &self.bases[b.0 * n + z.0] {
                        new.push(cat.compose(psi, &f).expect("composable"));
                    }
                }
            }
            if side.pre_closed() {
                for x in cat.objects() {
                    for phi in &self.bases[x.0 * n + a.0] {
                        new.push(cat.compose(&f, phi).expect("composable"));
                    }
                }
            }
            for h in new {
                let k = h.source().0 * n + h.target().0;
                if ideal.elements[k].insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        ideal
    }

    /// `R(S)` at the given anchors: morphisms `φ: X → A` with `s ∘ φ = 0` for
    /// every `s ∈ S` leaving `A`.
    pub fn right_annihilator(&self, class: &[Morphism], anchors: BTreeSet<ObjectId>) -> NaiveIdeal {
        let cat = self.cat;
        let mut out = self.empty(Side::Right, anchors.clone());
        for &a in &anchors {
            for x in cat.objects() {
                for phi in self.hom(x, a) {
                    let kills = class
                        .iter()
                        .filter(|s| s.source() == a)
                        .all(|s| cat.compose(s, phi).expect("composable").is_zero());
                    if kills {
                        out.elements[x.0 * self.n() + a.0].insert(phi.clone());
                    }
                }
            }
        }
        out
    }

    /// `L(S)` at the given anchors: morphisms `ψ: A → Z` with `ψ ∘ s = 0` for
    /// every `s ∈ S` entering `A`.
    pub fn left_annihilator(&self, class: &[Morphism], anchors: BTreeSet<ObjectId>) -> NaiveIdeal {
        let cat = self.cat;
        let mut out = self.empty(Side::Left, anchors.clone());
        for &a in &anchors {
            for z in cat.objects() {
                for psi in self.hom(a, z) {
                    let kills = class
                        .iter()
                        .filter(|s| s.target() == a)
                        .all(|s| cat.compose(psi, s).expect("composable").is_zero());
                    if kills {
                        out.elements[a.0 * self.n() + z.0].insert(psi.clone());
                    }
                }
            }
        }
        out
    }

    fn all_objects(&self) -> BTreeSet<ObjectId> {
        self.cat.objects().collect()
    }

    /// `R(I)` with the library's anchor convention.
    pub fn r(&self, i: &NaiveIdeal) -> NaiveIdeal {
        let anchors = if i.side == Side::Left { i.anchors.clone() } else { self.all_objects() };
        self.right_annihilator(&i.members(), anchors)
    }

    /// `L(I)` with the library's anchor convention.
    pub fn l(&self, i: &NaiveIdeal) -> NaiveIdeal {
        let anchors = if i.side == Side::Right { i.anchors.clone() } else { self.all_objects() };
        self.left_annihilator(&i.members(), anchors)
    }

    /// `⟨f| = {ψ ∘ f}` as an explicit set.
    pub fn principal_left(&self, f: &Morphism) -> NaiveIdeal {
        let mut out = self.empty(Side::Left, [f.source()].into());
        for z in self.cat.objects() {
            for psi in self.hom(f.target(), z) {
                out.elements[f.source().0 * self.n() + z.0].insert(self.cat.compose(psi, f).expect("composable"));
            }
        }
        out
    }

    /// `|f⟩ = {f ∘ φ}` as an explicit set.
    pub fn principal_right(&self, f: &Morphism) -> NaiveIdeal {
        let mut out = self.empty(Side::Right, [f.target()].into());
        for x in self.cat.objects() {
            for phi in self.hom(x, f.source()) {
                out.elements[x.0 * self.n() + f.target().0].insert(self.cat.compose(f, phi).expect("composable"));
            }
        }
        out
    }

    pub fn ker(&self, f: &Morphism) -> NaiveIdeal {
        self.r(&self.principal_left(f))
    }

    pub fn coker(&self, f: &Morphism) -> NaiveIdeal {
        self.l(&self.principal_right(f))
    }

    pub fn im(&self, f: &Morphism) -> NaiveIdeal {
        self.r(&self.coker(f))
    }

    pub fn coim(&self, f: &Morphism) -> NaiveIdeal {
        self.l(&self.ker(f))
    }

    /// The ideal generated by all composites `i ∘ j`, with the library's side
    /// and anchor rule; `None` when neither factor supplies a closure side.
    pub fn product(&self, i: &NaiveIdeal, j: &NaiveIdeal) -> Option<NaiveIdeal> {
        let (post, pre) = (i.side.post_closed(), j.side.pre_closed());
        let side = match (post, pre) {
            (true, true) => Side::TwoSided,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => return None,
        };
        let anchors = match side {
            Side::Left => j.anchors.clone(),
            Side::Right => i.anchors.clone(),
            Side::TwoSided => self.all_objects(),
        };
        let mut gens = BTreeSet::new();
        for x in i.members() {
            for y in j.members() {
                if y.target() == x.source() {
                    gens.insert(self.cat.compose(&x, &y).expect("composable"));
                }
            }
        }
        Some(self.saturate(side, anchors, &gens.into_iter().collect::<Vec<_>>()))
    }

    /// Componentwise intersection.
    pub fn intersect(&self, i: &NaiveIdeal, j: &NaiveIdeal) -> Vec<BTreeSet<Morphism>> {
        i.elements.iter().zip(&j.elements).map(|(x, y)| x.intersection(y).cloned().collect()).collect()
    }

    /// Explicit elements of a library ideal.
    pub fn from_ideal(&self, i: &Ideal<'_>, cap: u128) -> Result<NaiveIdeal> {
        let mut out = self.empty(i.side(), i.anchors().clone());
        for (a, b) in i.pairs() {
            out.elements[a.0 * self.n() + b.0] = i.component_elements(a, b, cap)?.into_iter().collect();
        }
        Ok(out)
    }
}

impl NaiveIdeal {
    pub fn members(&self) -> Vec<Morphism> {
        self.elements.iter().flatten().cloned().collect()
    }

    pub fn size(&self) -> usize {
        self.elements.iter().map(BTreeSet::len).sum()
    }
}

/// Compares every ideal operation with its naive counterpart: the principal
/// ideals, `Ker`, `Coker`, `Im`, `Coim` and saturation on each morphism, and
/// annihilators, re-saturation, products and intersections on the ideals
/// (all pairs). Returns one line per disagreement.
pub fn cross_check(
    cat: &FiniteLinearCategory,
    morphisms: &[Morphism],
    ideals: &[Ideal<'_>],
    cap: u128,
) -> Result<Vec<String>> {
    let u = Universe::new(cat, cap)?;
    let mut out = Vec::new();
    let same = |out: &mut Vec<String>, naive: &NaiveIdeal, lib: &Ideal<'_>, what: String| -> Result<()> {
        if *naive != u.from_ideal(lib, cap)? {
            out.push(what);
        }
        Ok(())
    };
    for f in morphisms {
        let d = cat.describe(f);
        same(&mut out, &u.principal_left(f), &principal_left(cat, f), format!("<f| {d}"))?;
        same(&mut out, &u.principal_right(f), &principal_right(cat, f), format!("|f> {d}"))?;
        same(&mut out, &u.ker(f), &ker(cat, f), format!("Ker {d}"))?;
        same(&mut out, &u.coker(f), &coker(cat, f), format!("Coker {d}"))?;
        same(&mut out, &u.im(f), &im(cat, f), format!("Im {d}"))?;
        same(&mut out, &u.coim(f), &coim(cat, f), format!("Coim {d}"))?;
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            let lib = saturate(cat, side, std::slice::from_ref(f));
            same(&mut out, &u.saturate(side, lib.anchors().clone(), std::slice::from_ref(f)), &lib, format!("saturate {side} {d}"))?;
        }
    }
    let naive = ideals.iter().map(|i| u.from_ideal(i, cap)).collect::<Result<Vec<_>>>()?;
    for (k, (i, ni)) in ideals.iter().zip(&naive).enumerate() {
        same(&mut out, &u.r(ni), &right_annihilator(i), format!("R(I{k})"))?;
        same(&mut out, &u.l(ni), &left_annihilator(i), format!("L(I{k})"))?;
        same(&mut out, &u.saturate(i.side(), i.anchors().clone(), &i.generators()), i, format!("saturate I{k}"))?;
    }
    for (a, (i, ni)) in ideals.iter().zip(&naive).enumerate() {
        for (b, (j, nj)) in ideals.iter().zip(&naive).enumerate().skip(a) {
            match (product(i, j), u.product(ni, nj)) {
                (Ok(lib), Some(n)) => same(&mut out, &n, &lib, format!("I{a}·I{b}"))?,
                (Err(_), None) => {}
                _ => out.push(format!("I{a}·I{b}: defined on one side only")),
            }
            let lib: Vec<BTreeSet<Morphism>> = i
                .pairs()
                .zip(common_morphisms(i, j)?)
                .map(|((x, y), c)| c.elements().into_iter().map(|v| cat.morphism(x, y, v).expect("in Hom")).collect())
                .collect();
            if lib != u.intersect(ni, nj) {
                out.push(format!("I{a} ∩ I{b}"));
            }
        }
    }
    Ok(out)
}
