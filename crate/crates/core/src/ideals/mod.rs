//! Ideals of a finite linear category: saturation, products, intersections,
//! annihilators and the kernel/cokernel/image/coimage ideals built from them.
//!
//! Left ideals are closed under post-composition (`⟨f| = {ψ∘f}`), right ideals
//! under pre-composition (`|f⟩ = {f∘φ}`). A one-sided ideal carries the set of
//! objects it is anchored at: sources for left ideals, targets for right
//! ideals. Annihilators are computed at the anchors, so that for instance the
//! kernel ideal of the zero left ideal at `B` is the total sieve on `B`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincat::{FiniteLinearCategory, Morphism, ObjectId};
use crate::linalg::{ElementVector, GroupHom, SubgroupBasis};

mod family;
mod quotient;

pub use family::{quotient_family, quotient_ideals, ModuleFamily};
pub use quotient::{quotient_category, QuotientCategory};

/// Default bound on the order of a component searched exhaustively.
pub const DEFAULT_ENUM_CAP: u128 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    /// Closed under post-composition.
    pub fn post_closed(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    /// Closed under pre-composition.
    pub fn pre_closed(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    fn from_closure(post: bool, pre: bool) -> Option<Side> {
        match (post, pre) {
            (true, true) => Some(Side::TwoSided),
            (true, false) => Some(Side::Left),
            (false, true) => Some(Side::Right),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Ideal<'c> {
    cat: &'c FiniteLinearCategory,
    side: Side,
    anchors: BTreeSet<ObjectId>,
    components: Vec<SubgroupBasis>,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.cat, other.cat)
            && self.side == other.side
            && self.anchors == other.anchors
            && self.components == other.components
    }
}

impl Eq for Ideal<'_> {}

fn all_objects(cat: &FiniteLinearCategory) -> BTreeSet<ObjectId> {
    cat.objects().collect()
}

fn same_category(a: &FiniteLinearCategory, b: &FiniteLinearCategory) -> Result<()> {
    if std::ptr::eq(a, b) {
        Ok(())
    } else {
        Err(Error::CategoryMismatch)
    }
}

impl<'c> Ideal<'c> {
    fn from_parts(
        cat: &'c FiniteLinearCategory,
        side: Side,
        anchors: BTreeSet<ObjectId>,
        components: Vec<SubgroupBasis>,
    ) -> Self {
        let anchors = if side == Side::TwoSided { all_objects(cat) } else { anchors };
        Self { cat, side, anchors, components }
    }

    pub fn zero(cat: &'c FiniteLinearCategory, side: Side, anchors: impl IntoIterator<Item = ObjectId>) -> Self {
        let components = cat
            .objects()
            .flat_map(|a| cat.objects().map(move |b| (a, b)))
            .map(|(a, b)| SubgroupBasis::zero(cat.hom(a, b)))
            .collect();
        Self::from_parts(cat, side, anchors.into_iter().collect(), components)
    }

    /// All morphisms out of (left) or into (right) the anchors; every
    /// morphism when two-sided.
    pub fn total(cat: &'c FiniteLinearCategory, side: Side, anchors: impl IntoIterator<Item = ObjectId>) -> Self {
        let anchors: BTreeSet<ObjectId> = anchors.into_iter().collect();
        let components = cat
            .objects()
            .flat_map(|a| cat.objects().map(move |b| (a, b)))
            .map(|(a, b)| {
                let on = match side {
                    Side::Left => anchors.contains(&a),
                    Side::Right => anchors.contains(&b),
                    Side::TwoSided => true,
                };
                if on {
                    SubgroupBasis::full(cat.hom(a, b))
                } else {
                    SubgroupBasis::zero(cat.hom(a, b))
                }
            })
            .collect();
        Self::from_parts(cat, side, anchors, components)
    }

    pub fn category(&self) -> &'c FiniteLinearCategory {
        self.cat
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn anchors(&self) -> &BTreeSet<ObjectId> {
        &self.anchors
    }

    fn idx(&self, a: ObjectId, b: ObjectId) -> usize {
        a.0 * self.cat.object_count() + b.0
    }

    pub fn component(&self, a: ObjectId, b: ObjectId) -> &SubgroupBasis {
        &self.components[self.idx(a, b)]
    }

    /// Components in row-major `(source, target)` order.
    pub fn components(&self) -> &[SubgroupBasis] {
        &self.components
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        self.component(f.source(), f.target()).contains(f.coords()).unwrap_or(false)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SubgroupBasis::is_zero)
    }

    /// Number of morphisms in the ideal.
    pub fn size(&self) -> u128 {
        self.components.iter().map(SubgroupBasis::order).sum()
    }

    /// Componentwise containment.
    pub fn is_subideal_of(&self, other: &Ideal<'_>) -> bool {
        self.components
            .iter()
            .zip(&other.components)
            .all(|(a, b)| a.is_subgroup_of(b).unwrap_or(false))
    }

    /// Same morphisms, ignoring side and anchors.
    pub fn same_class(&self, other: &Ideal<'_>) -> bool {
        self.components == other.components
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ObjectId, ObjectId)> + '_ {
        let cat = self.cat;
        cat.objects().flat_map(move |a| cat.objects().map(move |b| (a, b)))
    }

    /// Howell generators of every component, as morphisms.
    pub fn generators(&self) -> Vec<Morphism> {
        let mut out = Vec::new();
        for (a, b) in self.pairs() {
            for r in self.component(a, b).rows() {
                out.push(self.cat.morphism(a, b, r.clone()).expect("rows lie in the Hom-group"));
            }
        }
        out
    }

    /// Every element of the component `(a, b)`, if its order is within `cap`.
    pub fn component_elements(&self, a: ObjectId, b: ObjectId, cap: u128) -> Result<Vec<Morphism>> {
        let c = self.component(a, b);
        if c.order() > cap {
            return Err(Error::EnumerationCapExceeded { order: c.order(), cap });
        }
        Ok(c.elements().into_iter().map(|x| self.cat.morphism(a, b, x).expect("in Hom")).collect())
    }

    /// True when one more round of basis compositions changes nothing.
    pub fn is_saturated(&self) -> bool {
        let mut comps = self.components.clone();
        grow(self.cat, self.side, &mut comps, self.pairs().collect());
        comps == self.components
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{} ideal", self.side);
        if self.side != Side::TwoSided {
            let anchors: Vec<&str> = self.anchors.iter().map(|&a| self.cat.label(a)).collect();
            s.push_str(&format!(" at {{{}}}", anchors.join(",")));
        }
        for (a, b) in self.pairs() {
            let c = self.component(a, b);
            if !c.is_zero() {
                s.push_str(&format!("; {}->{}: {}", self.cat.label(a), self.cat.label(b), c));
            }
        }
        s
    }
}

/// Closes the components under the compositions `side` demands, starting from
/// the given dirty pairs.
fn grow(cat: &FiniteLinearCategory, side: Side, comps: &mut [SubgroupBasis], dirty: Vec<(ObjectId, ObjectId)>) {
    let n = cat.object_count();
    let mut queue: VecDeque<(ObjectId, ObjectId)> = dirty.into_iter().collect();
    let mut queued = vec![false; n * n];
    for &(a, b) in &queue {
        queued[a.0 * n + b.0] = true;
    }
    let add = |comps: &mut [SubgroupBasis], queue: &mut VecDeque<_>, queued: &mut Vec<bool>, a: ObjectId, b: ObjectId, gens: Vec<ElementVector>| {
        let k = a.0 * n + b.0;
        let mut rows = comps[k].rows().to_vec();
        let before = comps[k].clone();
        rows.extend(gens);
        let next = SubgroupBasis::howell_form(&rows, cat.hom(a, b)).expect("composites lie in Hom");
        if next != before {
            comps[k] = next;
            if !queued[k] {
                queued[k] = true;
                queue.push_back((a, b));
            }
        }
    };
    while let Some((a, b)) = queue.pop_front() {
        queued[a.0 * n + b.0] = false;
        let rows: Vec<Morphism> = comps[a.0 * n + b.0]
            .rows()
            .iter()
            .map(|r| cat.morphism(a, b, r.clone()).expect("in Hom"))
            .collect();
        if rows.is_empty() {
            continue;
        }
        if side.post_closed() {
            for c in cat.objects() {
                let gens: Vec<ElementVector> = cat
                    .basis(b, c)
                    .iter()
                    .flat_map(|e| rows.iter().map(move |r| (e, r)))
                    .map(|(e, r)| cat.compose(e, r).expect("composable").coords().clone())
                    .collect();
                if !gens.is_empty() {
                    add(comps, &mut queue, &mut queued, a, c, gens);
                }
            }
        }
        if side.pre_closed() {
            for c in cat.objects() {
                let gens: Vec<ElementVector> = cat
                    .basis(c, a)
                    .iter()
                    .flat_map(|e| rows.iter().map(move |r| (e, r)))
                    .map(|(e, r)| cat.compose(r, e).expect("composable").coords().clone())
                    .collect();
                if !gens.is_empty() {
                    add(comps, &mut queue, &mut queued, c, b, gens);
                }
            }
        }
    }
}

fn anchors_of(side: Side, gens: &[Morphism]) -> BTreeSet<ObjectId> {
    match side {
        Side::Left => gens.iter().map(Morphism::source).collect(),
        Side::Right => gens.iter().map(Morphism::target).collect(),
        Side::TwoSided => BTreeSet::new(),
    }
}

/// Smallest ideal of the given side containing the generators. One-sided
/// results are anchored at the generators' sources (left) or targets (right).
pub fn saturate<'c>(cat: &'c FiniteLinearCategory, side: Side, generators: &[Morphism]) -> Ideal<'c> {
    let mut ideal = Ideal::zero(cat, side, anchors_of(side, generators));
    let mut dirty = BTreeSet::new();
    for g in generators {
        let k = ideal.idx(g.source(), g.target());
        let mut rows = ideal.components[k].rows().to_vec();
        rows.push(g.coords().clone());
        ideal.components[k] =
            SubgroupBasis::howell_form(&rows, cat.hom(g.source(), g.target())).expect("generator lies in Hom");
        dirty.insert((g.source(), g.target()));
    }
    grow(cat, side, &mut ideal.components, dirty.into_iter().collect());
    ideal
}

/// `⟨f| = {ψ ∘ f}`, computed directly as the images of pre-composition with `f`.
pub fn principal_left<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    let mut ideal = Ideal::zero(cat, Side::Left, [f.source()]);
    for z in cat.objects() {
        let k = ideal.idx(f.source(), z);
        ideal.components[k] = cat.pre_compose_hom(f, z).image();
    }
    ideal
}

/// `|f⟩ = {f ∘ φ}`, computed directly as the images of post-composition with `f`.
pub fn principal_right<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    let mut ideal = Ideal::zero(cat, Side::Right, [f.target()]);
    for x in cat.objects() {
        let k = ideal.idx(x, f.target());
        ideal.components[k] = cat.post_compose_hom(f, x).image();
    }
    ideal
}

/// The two-sided ideal `⟨f⟩` generated by `f`.
pub fn principal_two_sided<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    saturate(cat, Side::TwoSided, std::slice::from_ref(f))
}

/// `I · J`: the ideal generated by the composites `i ∘ j`. It is closed under
/// post-composition when `I` is and under pre-composition when `J` is.
pub fn product<'c>(i: &Ideal<'c>, j: &Ideal<'c>) -> Result<Ideal<'c>> {
    same_category(i.cat, j.cat)?;
    let cat = i.cat;
    let side = Side::from_closure(i.side.post_closed(), j.side.pre_closed())
        .ok_or_else(|| Error::SideMismatch(format!("product of a {} ideal by a {} ideal", i.side, j.side)))?;
    let anchors = match side {
        Side::Left => j.anchors.clone(),
        Side::Right => i.anchors.clone(),
        Side::TwoSided => BTreeSet::new(),
    };
    let mut ideal = Ideal::zero(cat, side, anchors);
    let mut dirty = Vec::new();
    for (a, b) in j.pairs() {
        let jrows = j.component(a, b).rows();
        if jrows.is_empty() {
            continue;
        }
        for c in cat.objects() {
            let irows = i.component(b, c).rows();
            if irows.is_empty() {
                continue;
            }
            let mut gens = Vec::new();
            for ir in irows {
                let g = cat.morphism(b, c, ir.clone())?;
                for jr in jrows {
                    let f = cat.morphism(a, b, jr.clone())?;
                    gens.push(cat.compose(&g, &f)?.coords().clone());
                }
            }
            let k = ideal.idx(a, c);
            let mut rows = ideal.components[k].rows().to_vec();
            rows.extend(gens);
            ideal.components[k] = SubgroupBasis::howell_form(&rows, cat.hom(a, c))?;
            dirty.push((a, c));
        }
    }
    grow(cat, side, &mut ideal.components, dirty);
    Ok(ideal)
}

/// Componentwise intersection: the class of morphisms common to both.
pub fn common_morphisms(i: &Ideal<'_>, j: &Ideal<'_>) -> Result<Vec<SubgroupBasis>> {
    same_category(i.cat, j.cat)?;
    i.components.iter().zip(&j.components).map(|(a, b)| a.intersect(b)).collect()
}

/// Intersection of two ideals of the same side; the result is an ideal of that
/// side anchored at the common anchors.
pub fn intersect_ideals<'c>(i: &Ideal<'c>, j: &Ideal<'c>) -> Result<Ideal<'c>> {
    if i.side != j.side {
        return Err(Error::SideMismatch(format!("intersection of a {} and a {} ideal", i.side, j.side)));
    }
    let components = common_morphisms(i, j)?;
    let anchors = i.anchors.intersection(&j.anchors).copied().collect();
    let ideal = Ideal::from_parts(i.cat, i.side, anchors, components);
    debug_assert!(ideal.is_saturated());
    Ok(ideal)
}

/// `{φ: X → A | s ∘ φ = 0 for all s: A → Z in the class}`, for one anchor `A`.
fn right_kernel_at(cat: &FiniteLinearCategory, x: ObjectId, a: ObjectId, killers: &[Morphism]) -> SubgroupBasis {
    let src = cat.hom(x, a);
    if killers.is_empty() {
        return SubgroupBasis::full(src);
    }
    let maps: Vec<GroupHom> = killers.iter().map(|s| cat.post_compose_hom(s, x)).collect();
    GroupHom::stack(src, &maps).expect("same source").kernel()
}

/// `{ψ: A → Z | ψ ∘ s = 0 for all s: W → A in the class}`, for one anchor `A`.
fn left_kernel_at(cat: &FiniteLinearCategory, a: ObjectId, z: ObjectId, killers: &[Morphism]) -> SubgroupBasis {
    let src = cat.hom(a, z);
    if killers.is_empty() {
        return SubgroupBasis::full(src);
    }
    let maps: Vec<GroupHom> = killers.iter().map(|s| cat.pre_compose_hom(s, z)).collect();
    GroupHom::stack(src, &maps).expect("same source").kernel()
}

fn right_annihilator_with<'c>(
    cat: &'c FiniteLinearCategory,
    anchors: BTreeSet<ObjectId>,
    class: &[Morphism],
) -> Ideal<'c> {
    let mut ideal = Ideal::zero(cat, Side::Right, anchors.iter().copied());
    for &a in &anchors {
        let killers: Vec<Morphism> = class.iter().filter(|s| s.source() == a).cloned().collect();
        for x in cat.objects() {
            let k = ideal.idx(x, a);
            ideal.components[k] = right_kernel_at(cat, x, a, &killers);
        }
    }
    ideal
}

fn left_annihilator_with<'c>(
    cat: &'c FiniteLinearCategory,
    anchors: BTreeSet<ObjectId>,
    class: &[Morphism],
) -> Ideal<'c> {
    let mut ideal = Ideal::zero(cat, Side::Left, anchors.iter().copied());
    for &a in &anchors {
        let killers: Vec<Morphism> = class.iter().filter(|s| s.target() == a).cloned().collect();
        for z in cat.objects() {
            let k = ideal.idx(a, z);
            ideal.components[k] = left_kernel_at(cat, a, z, &killers);
        }
    }
    ideal
}

/// `R(I) = {a | i ∘ a = 0 for all i ∈ I}`, a right ideal anchored where `I`
/// is (every object for two-sided or right `I`).
pub fn right_annihilator<'c>(i: &Ideal<'c>) -> Ideal<'c> {
    let anchors = if i.side == Side::Left { i.anchors.clone() } else { all_objects(i.cat) };
    right_annihilator_with(i.cat, anchors, &i.generators())
}

/// `L(I) = {b | b ∘ i = 0 for all i ∈ I}`, a left ideal anchored where `I`
/// is (every object for two-sided or left `I`).
pub fn left_annihilator<'c>(i: &Ideal<'c>) -> Ideal<'c> {
    let anchors = if i.side == Side::Right { i.anchors.clone() } else { all_objects(i.cat) };
    left_annihilator_with(i.cat, anchors, &i.generators())
}

/// Right annihilator of a class of morphisms, anchored at their sources.
pub fn right_annihilator_of<'c>(cat: &'c FiniteLinearCategory, class: &[Morphism]) -> Result<Ideal<'c>> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    Ok(right_annihilator_with(cat, class.iter().map(Morphism::source).collect(), class))
}

/// Left annihilator of a class of morphisms, anchored at their targets.
pub fn left_annihilator_of<'c>(cat: &'c FiniteLinearCategory, class: &[Morphism]) -> Result<Ideal<'c>> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    Ok(left_annihilator_with(cat, class.iter().map(Morphism::target).collect(), class))
}

/// `Ker(I) = R(I)` for a left (or two-sided) ideal.
pub fn ker_ideal<'c>(i: &Ideal<'c>) -> Result<Ideal<'c>> {
    if i.side == Side::Right {
        return Err(Error::SideMismatch("kernel ideal of a right ideal".into()));
    }
    Ok(right_annihilator(i))
}

/// `Coker(I) = L(I)` for a right (or two-sided) ideal.
pub fn coker_ideal<'c>(i: &Ideal<'c>) -> Result<Ideal<'c>> {
    if i.side == Side::Left {
        return Err(Error::SideMismatch("cokernel ideal of a left ideal".into()));
    }
    Ok(left_annihilator(i))
}

/// `Im(I) = Ker(Coker(I))`.
pub fn im_ideal<'c>(i: &Ideal<'c>) -> Result<Ideal<'c>> {
    ker_ideal(&coker_ideal(i)?)
}

/// `Coim(I) = Coker(Ker(I))`.
pub fn coim_ideal<'c>(i: &Ideal<'c>) -> Result<Ideal<'c>> {
    coker_ideal(&ker_ideal(i)?)
}

/// `Ker(f) = Ker(⟨f|)`.
pub fn ker<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    right_annihilator(&principal_left(cat, f))
}

/// `Coker(f) = Coker(|f⟩)`.
pub fn coker<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    left_annihilator(&principal_right(cat, f))
}

/// `Im(f) = Ker(Coker(f))`.
pub fn im<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    right_annihilator(&coker(cat, f))
}

/// `Coim(f) = Coker(Ker(f))`.
pub fn coim<'c>(cat: &'c FiniteLinearCategory, f: &Morphism) -> Ideal<'c> {
    left_annihilator(&ker(cat, f))
}

/// A right ideal is closed when it equals its image, a left ideal when it
/// equals its coimage.
pub fn is_closed(i: &Ideal<'_>) -> Result<bool> {
    match i.side {
        Side::Right => Ok(im_ideal(i)? == *i),
        Side::Left => Ok(coim_ideal(i)? == *i),
        Side::TwoSided => Err(Error::SideMismatch("closedness of a two-sided ideal".into())),
    }
}

/// Objects carrying a nonzero component, read on the anchored index
/// (sources for left ideals, targets for right ideals, both for two-sided).
pub fn support(i: &Ideal<'_>) -> BTreeSet<ObjectId> {
    let mut out = BTreeSet::new();
    for (a, b) in i.pairs() {
        if !i.component(a, b).is_zero() {
            match i.side {
                Side::Left => {
                    out.insert(a);
                }
                Side::Right => {
                    out.insert(b);
                }
                Side::TwoSided => {
                    out.insert(a);
                    out.insert(b);
                }
            }
        }
    }
    out
}

/// Nonzero and different from the whole Hom on its support.
pub fn is_proper(i: &Ideal<'_>) -> bool {
    let supp = support(i);
    if supp.is_empty() {
        return false;
    }
    i.pairs().any(|(a, b)| {
        let on = match i.side {
            Side::Left => supp.contains(&a),
            Side::Right => supp.contains(&b),
            Side::TwoSided => supp.contains(&a) && supp.contains(&b),
        };
        on && !i.component(a, b).is_full()
    })
}

fn check_one_sided(i: &Ideal<'_>) -> Result<()> {
    if i.side == Side::TwoSided {
        Err(Error::SideMismatch("principality is tested for one-sided ideals".into()))
    } else {
        Ok(())
    }
}

/// Candidate generators of a one-sided ideal: the elements of its anchored
/// components, in declaration order.
fn candidates(i: &Ideal<'_>, cap: u128) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for &anchor in &i.anchors {
        for other in i.cat.objects() {
            let (a, b) = if i.side == Side::Left { (anchor, other) } else { (other, anchor) };
            out.extend(i.component_elements(a, b, cap)?);
        }
    }
    Ok(out)
}

fn generates(i: &Ideal<'_>, g: &Morphism) -> bool {
    let p = if i.side == Side::Left { principal_left(i.cat, g) } else { principal_right(i.cat, g) };
    p.same_class(i)
}

/// A single element generating the ideal, searched exhaustively.
pub fn is_principal(i: &Ideal<'_>, cap: u128) -> Result<Option<Morphism>> {
    check_one_sided(i)?;
    for g in candidates(i, cap)? {
        if generates(i, &g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Whether `φ ↦ g ∘ φ` is injective on every `Hom(X, dom g)`.
pub fn is_free_right(cat: &FiniteLinearCategory, g: &Morphism) -> bool {
    cat.objects().all(|x| cat.post_compose_hom(g, x).is_injective())
}

/// Whether `ψ ↦ ψ ∘ g` is injective on every `Hom(cod g, X)`.
pub fn is_free_left(cat: &FiniteLinearCategory, g: &Morphism) -> bool {
    cat.objects().all(|x| cat.pre_compose_hom(g, x).is_injective())
}

/// A categorical kernel of `f`: a generator `k` of `Ker(f)` with `|k⟩ = Ker(f)`
/// whose right action is injective.
pub fn kernel_exists(cat: &FiniteLinearCategory, f: &Morphism, cap: u128) -> Result<Option<Morphism>> {
    let k = ker(cat, f);
    for g in candidates(&k, cap)? {
        if is_free_right(cat, &g) && generates(&k, &g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// A categorical cokernel of `f`: a generator `c` of `Coker(f)` with
/// `⟨c| = Coker(f)` whose left action is injective.
pub fn cokernel_exists(cat: &FiniteLinearCategory, f: &Morphism, cap: u128) -> Result<Option<Morphism>> {
    let c = coker(cat, f);
    for g in candidates(&c, cap)? {
        if is_free_left(cat, &g) && generates(&c, &g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `f` is a monomorphism iff `Ker(f) = 0`.
pub fn is_mono(cat: &FiniteLinearCategory, f: &Morphism) -> bool {
    ker(cat, f).is_zero()
}

/// `f` is an epimorphism iff `Coker(f) = 0`.
pub fn is_epi(cat: &FiniteLinearCategory, f: &Morphism) -> bool {
    coker(cat, f).is_zero()
}
