//! Bounded chain complexes (`d_n: C_n → C_{n−1}`), chain maps, and the
//! ideal-theoretic homology families `H^R_n = Ker(d_n)/Im(d_{n+1})` and
//! `H^L_n = Coker(d_{n+1})/Coim(d_n)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{
    self, coim_ideal, coker_ideal, im_ideal, ker_ideal, quotient_family, saturate, Ideal, ModuleFamily, Side,
};
use crate::lincat::{FiniteLinearCategory, Morphism, ObjectId};
use crate::linalg::{ElementVector, GroupHom, OrderVector, SubgroupBasis, Subquotient};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChainComplex {
    lo: i64,
    objects: Vec<ObjectId>,
    /// `differentials[k]` is `d_{lo+k+1}`.
    differentials: Vec<Morphism>,
}

impl ChainComplex {
    /// `objects[k]` sits in degree `lo + k`; `differentials[k]` is
    /// `d_{lo+k+1}: C_{lo+k+1} → C_{lo+k}`.
    pub fn new(lo: i64, objects: Vec<ObjectId>, differentials: Vec<Morphism>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::InvalidComplex("a complex needs at least one object".into()));
        }
        if differentials.len() + 1 != objects.len() {
            return Err(Error::InvalidComplex(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len() - 1,
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.source() != objects[k + 1] || d.target() != objects[k] {
                return Err(Error::InvalidComplex(format!(
                    "d_{} has the wrong endpoints",
                    lo + k as i64 + 1
                )));
            }
        }
        Ok(Self { lo, objects, differentials })
    }

    /// The object `x` alone in degree `n`.
    pub fn concentrated(x: ObjectId, n: i64) -> Self {
        Self { lo: n, objects: vec![x], differentials: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn contains_degree(&self, n: i64) -> bool {
        (self.lo..=self.hi()).contains(&n)
    }

    pub fn object(&self, n: i64) -> Option<ObjectId> {
        if self.contains_degree(n) {
            Some(self.objects[(n - self.lo) as usize])
        } else {
            None
        }
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    /// `d_n` for `lo < n ≤ hi`; the differentials leaving the ends are zero
    /// maps to the zero object and are not stored.
    pub fn differential(&self, n: i64) -> Option<&Morphism> {
        if n > self.lo && n <= self.hi() {
            Some(&self.differentials[(n - self.lo - 1) as usize])
        } else {
            None
        }
    }

    /// The complex read in the opposite category with degrees negated:
    /// `D_k = C_{−k}`, `d^D_k = (d^C_{−k+1})^op`.
    pub fn reversed(&self, cat: &FiniteLinearCategory) -> ChainComplex {
        let mut objects = self.objects.clone();
        objects.reverse();
        let mut differentials: Vec<Morphism> = self.differentials.iter().map(|d| cat.op_morphism(d)).collect();
        differentials.reverse();
        ChainComplex { lo: -self.hi(), objects, differentials }
    }

    pub fn describe(&self, cat: &FiniteLinearCategory) -> String {
        let mut parts = Vec::new();
        for n in self.degrees().rev() {
            parts.push(format!("{}[{n}]", cat.label(self.object(n).expect("in range"))));
            if let Some(d) = self.differential(n) {
                parts.push(format!("--{}-->", d.coords()));
            }
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    /// Degrees `n` with `d_n ∘ d_{n+1} ≠ 0`.
    pub failures: Vec<i64>,
}

impl ComplexReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_complex(cat: &FiniteLinearCategory, c: &ChainComplex) -> Result<ComplexReport> {
    let mut report = ComplexReport::default();
    for n in c.degrees() {
        if let (Some(d), Some(e)) = (c.differential(n), c.differential(n + 1)) {
            if !cat.compose(d, e)?.is_zero() {
                report.failures.push(n);
            }
        }
    }
    Ok(report)
}

fn require_complex(cat: &FiniteLinearCategory, c: &ChainComplex) -> Result<()> {
    let r = validate_complex(cat, c)?;
    match r.failures.first() {
        None => Ok(()),
        Some(n) => Err(Error::InvalidComplex(format!("d_{n} ∘ d_{} ≠ 0", n + 1))),
    }
}

/// The three conditions `g∘f = 0`, `Im(f) ⊆ Ker(g)` and `Coker(f) ⊇ Coim(g)`,
/// each computed independently.
pub fn complex_conditions(cat: &FiniteLinearCategory, g: &Morphism, f: &Morphism) -> Result<[bool; 3]> {
    let zero = cat.compose(g, f)?.is_zero();
    let im_in_ker = ideals::im(cat, f).is_subideal_of(&ideals::ker(cat, g));
    let coim_in_coker = ideals::coim(cat, g).is_subideal_of(&ideals::coker(cat, f));
    Ok([zero, im_in_ker, coim_in_coker])
}

/// A homology family in one degree.
#[derive(Clone, Debug)]
pub struct HomologyFamily<'c> {
    pub degree: i64,
    pub family: ModuleFamily<'c>,
}

/// The kernel part `Ker(d_n)`, with `Ker(0) = ` total sieve at `C_lo`.
fn kernel_part<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex, n: i64) -> Result<Ideal<'c>> {
    let cn = c.object(n).ok_or(Error::DegreeOutOfRange(n))?;
    match c.differential(n) {
        Some(d) => Ok(ideals::ker(cat, d)),
        None => ker_ideal(&Ideal::zero(cat, Side::Left, [cn])),
    }
}

/// The image part `Im(d_{n+1})`, zero at `C_hi`.
fn image_part<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex, n: i64) -> Result<Ideal<'c>> {
    let cn = c.object(n).ok_or(Error::DegreeOutOfRange(n))?;
    match c.differential(n + 1) {
        Some(d) => Ok(ideals::im(cat, d)),
        None => im_ideal(&Ideal::zero(cat, Side::Right, [cn])),
    }
}

/// `H^R_n(C)(X) = Ker(d_n)(X, C_n) / Im(d_{n+1})(X, C_n)`, contravariant in `X`.
pub fn right_homology<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex, n: i64) -> Result<HomologyFamily<'c>> {
    let cn = c.object(n).ok_or(Error::DegreeOutOfRange(n))?;
    require_complex(cat, c)?;
    let family = quotient_family(&kernel_part(cat, c, n)?, &image_part(cat, c, n)?, cn)?;
    Ok(HomologyFamily { degree: n, family })
}

/// `H^R_n(C)(X)` at one object.
pub fn right_homology_at(cat: &FiniteLinearCategory, c: &ChainComplex, n: i64, x: ObjectId) -> Result<Subquotient> {
    Ok(right_homology(cat, c, n)?.family.group(x).clone())
}

/// `H^L_n(C)(X) = Coker(d_{n+1})(C_n, X) / Coim(d_n)(C_n, X)`, covariant in `X`.
pub fn left_homology<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex, n: i64) -> Result<HomologyFamily<'c>> {
    let cn = c.object(n).ok_or(Error::DegreeOutOfRange(n))?;
    require_complex(cat, c)?;
    let cok = match c.differential(n + 1) {
        Some(d) => ideals::coker(cat, d),
        None => coker_ideal(&Ideal::zero(cat, Side::Right, [cn]))?,
    };
    let coim = match c.differential(n) {
        Some(d) => ideals::coim(cat, d),
        None => coim_ideal(&Ideal::zero(cat, Side::Left, [cn]))?,
    };
    let family = quotient_family(&cok, &coim, cn)?;
    Ok(HomologyFamily { degree: n, family })
}

/// Every right homology family vanishes.
pub fn is_exact(cat: &FiniteLinearCategory, c: &ChainComplex) -> Result<bool> {
    for n in c.degrees() {
        if !right_homology(cat, c, n)?.family.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every left homology family vanishes.
pub fn is_left_exact_complex(cat: &FiniteLinearCategory, c: &ChainComplex) -> Result<bool> {
    for n in c.degrees() {
        if !left_homology(cat, c, n)?.family.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-wise block layout of `⊕_n Hom(C_n, D_{n+shift})` over the degrees
/// where both objects exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLayout {
    pub blocks: Vec<(i64, ObjectId, ObjectId)>,
    pub orders: OrderVector,
    offsets: Vec<usize>,
}

impl GradedLayout {
    pub fn new(cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex, shift: i64) -> Self {
        let mut blocks = Vec::new();
        let mut orders = OrderVector::trivial();
        let mut offsets = Vec::new();
        for n in c.degrees() {
            if let (Some(x), Some(y)) = (c.object(n), d.object(n + shift)) {
                offsets.push(orders.rank());
                orders = orders.concat(cat.hom(x, y));
                blocks.push((n, x, y));
            }
        }
        Self { blocks, orders, offsets }
    }

    pub fn position(&self, n: i64) -> Option<usize> {
        self.blocks.iter().position(|b| b.0 == n)
    }

    /// Splits a vector into its degree components.
    pub fn split(&self, cat: &FiniteLinearCategory, v: &ElementVector) -> BTreeMap<i64, Morphism> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(k, &(n, x, y))| {
                let r = cat.hom(x, y).rank();
                let coords = ElementVector::new(v.coords()[self.offsets[k]..self.offsets[k] + r].to_vec());
                (n, cat.morphism(x, y, coords).expect("block lies in Hom"))
            })
            .collect()
    }

    /// Concatenates degree components; missing degrees are zero.
    pub fn join(&self, cat: &FiniteLinearCategory, parts: &BTreeMap<i64, Morphism>) -> ElementVector {
        let mut v = Vec::with_capacity(self.orders.rank());
        for &(n, x, y) in &self.blocks {
            match parts.get(&n) {
                Some(f) => v.extend_from_slice(f.coords().coords()),
                None => v.extend(std::iter::repeat_n(0, cat.rank(x, y))),
            }
        }
        ElementVector::new(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    /// `f_n` for every degree where both `C_n` and `D_n` exist.
    components: BTreeMap<i64, Morphism>,
}

impl ChainMap {
    /// Degrees absent from `components` are taken to be zero.
    pub fn new(
        cat: &FiniteLinearCategory,
        source: ChainComplex,
        target: ChainComplex,
        mut components: BTreeMap<i64, Morphism>,
    ) -> Result<Self> {
        for (&n, f) in &components {
            if source.object(n) != Some(f.source()) || target.object(n) != Some(f.target()) {
                return Err(Error::InvalidChainMap(format!("component f_{n} has the wrong endpoints")));
            }
        }
        for n in source.degrees() {
            if let (Some(x), Some(y)) = (source.object(n), target.object(n)) {
                components.entry(n).or_insert_with(|| cat.zero_morphism(x, y));
            }
        }
        let map = Self { source, target, components };
        if let Some(n) = map.failing_square(cat)? {
            return Err(Error::InvalidChainMap(format!("square at degree {n} does not commute")));
        }
        Ok(map)
    }

    fn failing_square(&self, cat: &FiniteLinearCategory) -> Result<Option<i64>> {
        let (c, d) = (&self.source, &self.target);
        for n in c.degrees() {
            let (Some(x), Some(y)) = (c.object(n), d.object(n - 1)) else { continue };
            let mut lhs = cat.zero_morphism(x, y);
            if let (Some(dd), Some(f)) = (d.differential(n), self.component(n)) {
                lhs = cat.compose(dd, f)?;
            }
            let mut rhs = cat.zero_morphism(x, y);
            if let (Some(f), Some(dc)) = (self.component(n - 1), c.differential(n)) {
                rhs = cat.compose(f, dc)?;
            }
            if lhs != rhs {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    pub fn identity(cat: &FiniteLinearCategory, c: &ChainComplex) -> Self {
        let components = c.degrees().map(|n| (n, cat.identity(c.object(n).expect("in range")))).collect();
        Self { source: c.clone(), target: c.clone(), components }
    }

    pub fn zero(cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex) -> Self {
        Self::new(cat, c.clone(), d.clone(), BTreeMap::new()).expect("zero map commutes")
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component(&self, n: i64) -> Option<&Morphism> {
        self.components.get(&n)
    }

    pub fn components(&self) -> &BTreeMap<i64, Morphism> {
        &self.components
    }

    /// `self ∘ other`.
    pub fn compose(&self, cat: &FiniteLinearCategory, other: &ChainMap) -> Result<ChainMap> {
        if other.target != self.source {
            return Err(Error::Composability("chain maps between different complexes".into()));
        }
        let mut components = BTreeMap::new();
        for (&n, f) in &other.components {
            if let Some(g) = self.components.get(&n) {
                components.insert(n, cat.compose(g, f)?);
            }
        }
        ChainMap::new(cat, other.source.clone(), self.target.clone(), components)
    }

    pub fn add(&self, cat: &FiniteLinearCategory, other: &ChainMap) -> Result<ChainMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Composability("adding chain maps with different endpoints".into()));
        }
        let components = self
            .components
            .iter()
            .map(|(&n, f)| Ok((n, cat.add(f, &other.components[&n])?)))
            .collect::<Result<_>>()?;
        ChainMap::new(cat, self.source.clone(), self.target.clone(), components)
    }

    pub fn sub(&self, cat: &FiniteLinearCategory, other: &ChainMap) -> Result<ChainMap> {
        let neg = ChainMap {
            source: other.source.clone(),
            target: other.target.clone(),
            components: other.components.iter().map(|(&n, f)| (n, cat.neg(f))).collect(),
        };
        self.add(cat, &neg)
    }
}

/// The map on homology induced by a chain map: per object `X`, post-composition
/// with `f_n` from `H^R_n(C)(X)` to `H^R_n(D)(X)`.
pub fn induced_map(cat: &FiniteLinearCategory, f: &ChainMap, n: i64) -> Result<Vec<GroupHom>> {
    let (c, d) = (f.source(), f.target());
    let fn_ = f.component(n).ok_or(Error::DegreeOutOfRange(n))?;
    let hc = right_homology(cat, c, n)?;
    let hd = right_homology(cat, d, n)?;
    cat.objects()
        .map(|x| {
            let h = cat.post_compose_hom(fn_, x);
            Subquotient::induced(&h, hc.family.group(x), hd.family.group(x))
        })
        .collect()
}

/// A degree `+1` family `s_n: C_n → D_{n+1}`.
pub type Homotopy = BTreeMap<i64, Morphism>;

/// The linear map `s ↦ d s + s d` from `⊕ Hom(C_n, D_{n+1})` to
/// `⊕ Hom(C_n, D_n)`, with both layouts.
pub fn homotopy_map(
    cat: &FiniteLinearCategory,
    c: &ChainComplex,
    d: &ChainComplex,
) -> Result<(GroupHom, GradedLayout, GradedLayout)> {
    let unknowns = GradedLayout::new(cat, c, d, 1);
    let equations = GradedLayout::new(cat, c, d, 0);
    let mut columns = Vec::with_capacity(unknowns.orders.rank());
    for &(k, x, y) in &unknowns.blocks {
        for e in cat.basis(x, y) {
            let mut parts = BTreeMap::new();
            // d^D_{k+1} ∘ e lands in degree k
            if let (Some(dd), Some(_)) = (d.differential(k + 1), equations.position(k)) {
                parts.insert(k, cat.compose(dd, &e)?);
            }
            // e ∘ d^C_{k+1} lands in degree k+1
            if let (Some(dc), Some(_)) = (c.differential(k + 1), equations.position(k + 1)) {
                parts.insert(k + 1, cat.compose(&e, dc)?);
            }
            columns.push(equations.join(cat, &parts));
        }
    }
    let map = GroupHom::new(unknowns.orders.clone(), equations.orders.clone(), columns)?;
    Ok((map, unknowns, equations))
}

/// The map sending a graded family `(f_n: C_n → D_n)` to the defects
/// `d^D_n ∘ f_n − f_{n−1} ∘ d^C_n` in `⊕ Hom(C_n, D_{n−1})`. Its kernel is
/// the group of chain maps.
pub fn commutation_map(cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex) -> Result<(GroupHom, GradedLayout)> {
    let graded = GradedLayout::new(cat, c, d, 0);
    let defects = GradedLayout::new(cat, c, d, -1);
    let mut columns = Vec::with_capacity(graded.orders.rank());
    for &(n, x, y) in &graded.blocks {
        for e in cat.basis(x, y) {
            let mut parts: BTreeMap<i64, Morphism> = BTreeMap::new();
            if let (Some(dd), Some(_)) = (d.differential(n), defects.position(n)) {
                parts.insert(n, cat.compose(dd, &e)?);
            }
            if let (Some(dc), Some(_)) = (c.differential(n + 1), defects.position(n + 1)) {
                let term = cat.neg(&cat.compose(&e, dc)?);
                parts.insert(n + 1, term);
            }
            columns.push(defects.join(cat, &parts));
        }
    }
    Ok((GroupHom::new(graded.orders.clone(), defects.orders.clone(), columns)?, graded))
}

/// The group of chain maps `C → D` as a subgroup of the graded Hom.
pub fn chain_map_group(cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex) -> Result<(SubgroupBasis, GradedLayout)> {
    let (map, layout) = commutation_map(cat, c, d)?;
    Ok((map.kernel(), layout))
}

/// The chain map with the given graded coordinates.
pub fn chain_map_from_coords(
    cat: &FiniteLinearCategory,
    c: &ChainComplex,
    d: &ChainComplex,
    layout: &GradedLayout,
    v: &ElementVector,
) -> Result<ChainMap> {
    ChainMap::new(cat, c.clone(), d.clone(), layout.split(cat, v))
}

/// The chain map `d s + s d` of a degree `+1` family.
pub fn homotopy_boundary(cat: &FiniteLinearCategory, c: &ChainComplex, d: &ChainComplex, s: &Homotopy) -> Result<ChainMap> {
    let (map, unknowns, equations) = homotopy_map(cat, c, d)?;
    let v = map.apply(&unknowns.join(cat, s));
    ChainMap::new(cat, c.clone(), d.clone(), equations.split(cat, &v))
}

/// A homotopy `s` with `f − g = d s + s d`, if one exists.
pub fn are_homotopic(cat: &FiniteLinearCategory, f: &ChainMap, g: &ChainMap) -> Result<Option<Homotopy>> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Composability("homotopy between non-parallel chain maps".into()));
    }
    let (map, unknowns, equations) = homotopy_map(cat, f.source(), f.target())?;
    let diff = f.sub(cat, g)?;
    let rhs = equations.join(cat, diff.components());
    Ok(map.solve(&rhs)?.map(|s| unknowns.split(cat, &s)))
}

/// Checks `f − g = d s + s d` degree by degree.
pub fn verify_homotopy(cat: &FiniteLinearCategory, f: &ChainMap, g: &ChainMap, s: &Homotopy) -> Result<bool> {
    let (c, d) = (f.source(), f.target());
    for n in c.degrees() {
        let (Some(x), Some(y)) = (c.object(n), d.object(n)) else { continue };
        let mut total = cat.zero_morphism(x, y);
        if let (Some(dd), Some(sn)) = (d.differential(n + 1), s.get(&n)) {
            total = cat.add(&total, &cat.compose(dd, sn)?)?;
        }
        if let (Some(sp), Some(dc)) = (s.get(&(n - 1)), c.differential(n)) {
            total = cat.add(&total, &cat.compose(sp, dc)?)?;
        }
        let want = cat.sub(&f.components()[&n], &g.components()[&n])?;
        if total != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Injectivity and middle-exactness of the Hom-sequences of `A →f B →g C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomSequenceReport {
    pub ideal_exact: bool,
    /// `Hom(X, A) → Hom(X, B)` injective.
    pub covariant_injective: bool,
    /// `im Hom(X, f) = ker Hom(X, g)`.
    pub covariant_middle_exact: bool,
    /// `Hom(X, B) → Hom(X, C)` surjective.
    pub covariant_right_exact: bool,
    /// `Hom(C, X) → Hom(B, X)` injective.
    pub contravariant_injective: bool,
    /// `im Hom(g, X) = ker Hom(f, X)`.
    pub contravariant_middle_exact: bool,
    pub ranks: [usize; 3],
}

/// The Hom-sequences of the exact sequence `0 → A → B → C → 0` (with `C = 0`
/// when `g` is absent) against `X`.
pub fn hom_left_sequences(
    cat: &FiniteLinearCategory,
    f: &Morphism,
    g: Option<&Morphism>,
    x: ObjectId,
) -> Result<HomSequenceReport> {
    let complex = match g {
        Some(g) => ChainComplex::new(0, vec![g.target(), g.source(), f.source()], vec![g.clone(), f.clone()])?,
        None => ChainComplex::new(0, vec![f.target(), f.source()], vec![f.clone()])?,
    };
    if !is_exact(cat, &complex)? {
        return Err(Error::NotExact(complex.describe(cat)));
    }
    let f_star = cat.post_compose_hom(f, x);
    let f_upper = cat.pre_compose_hom(f, x);
    let (cov_mid, cov_right, contra_inj, contra_mid, rank_c) = match g {
        Some(g) => {
            let g_star = cat.post_compose_hom(g, x);
            let g_upper = cat.pre_compose_hom(g, x);
            (
                f_star.image() == g_star.kernel(),
                g_star.is_surjective(),
                g_upper.is_injective(),
                g_upper.image() == f_upper.kernel(),
                cat.rank(x, g.target()),
            )
        }
        None => (f_star.is_surjective(), true, true, f_upper.is_injective(), 0),
    };
    Ok(HomSequenceReport {
        ideal_exact: true,
        covariant_injective: f_star.is_injective(),
        covariant_middle_exact: cov_mid,
        covariant_right_exact: cov_right,
        contravariant_injective: contra_inj,
        contravariant_middle_exact: contra_mid,
        ranks: [cat.rank(x, f.source()), cat.rank(x, f.target()), rank_c],
    })
}

/// `Im(f)(X, cod f)` and the image of `Hom(X, f)`.
pub fn im_vs_pointwise_image(cat: &FiniteLinearCategory, f: &Morphism, x: ObjectId) -> (SubgroupBasis, SubgroupBasis) {
    let ideal = ideals::im(cat, f).component(x, f.target()).clone();
    let pointwise = cat.post_compose_hom(f, x).image();
    (ideal, pointwise)
}

/// The right ideal generated by all differentials and its left counterpart,
/// both anchored at every object of the complex. The anchoring adjoins the
/// boundary sieves: `Ker` of the left ideal is the total sieve at `C_lo`.
pub fn global_ideals<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex) -> (Ideal<'c>, Ideal<'c>) {
    let anchors: Vec<ObjectId> = c.objects().to_vec();
    let ds: Vec<Morphism> = (c.lo() + 1..=c.hi()).filter_map(|n| c.differential(n).cloned()).collect();
    let grow = |side: Side| {
        let mut gens = ds.clone();
        for &a in &anchors {
            for b in cat.objects() {
                let (s, t) = if side == Side::Left { (a, b) } else { (b, a) };
                gens.push(cat.zero_morphism(s, t));
            }
        }
        saturate(cat, side, &gens)
    };
    (grow(Side::Right), grow(Side::Left))
}

/// `Ker(J)/Im(I)` at `C_n` from the global ideals.
pub fn global_homology<'c>(cat: &'c FiniteLinearCategory, c: &ChainComplex, n: i64) -> Result<ModuleFamily<'c>> {
    let cn = c.object(n).ok_or(Error::DegreeOutOfRange(n))?;
    require_complex(cat, c)?;
    let (right, left) = global_ideals(cat, c);
    quotient_family(&ker_ideal(&left)?, &im_ideal(&right)?, cn)
}

#[cfg(test)]
mod tests;
