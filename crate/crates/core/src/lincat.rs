//! Finite `Z/m`-linear categories: objects, finitely generated Hom-groups with
//! fixed ordered bases, and composition given by structure constants.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ElementVector, GroupHom, OrderVector, ResidueRing};

mod builders;

pub use builders::{
    build_free_linearization, build_module_category, build_quiver_category, ModuleModel,
    OrdinaryCategory, Quiver,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ObjectId(pub usize);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomGroup {
    pub source: ObjectId,
    pub target: ObjectId,
    pub orders: OrderVector,
    pub basis_labels: Vec<String>,
}

impl HomGroup {
    pub fn rank(&self) -> usize {
        self.orders.rank()
    }
}

/// A morphism given by its coordinates in the Hom-group basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Morphism {
    source: ObjectId,
    target: ObjectId,
    coords: ElementVector,
}

impl Morphism {
    pub(crate) fn from_raw(source: ObjectId, target: ObjectId, coords: ElementVector) -> Self {
        Self { source, target, coords }
    }

    pub fn source(&self) -> ObjectId {
        self.source
    }

    pub fn target(&self) -> ObjectId {
        self.target
    }

    pub fn coords(&self) -> &ElementVector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// Unvalidated description of a finite linear category.
///
/// `comp[(a·n + b)·n + c]` holds the structure constants for
/// `Hom(b,c) × Hom(a,b) → Hom(a,c)`: entry `j·rank(a,b) + i` is `e_j ∘ e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryData {
    pub ring: ResidueRing,
    pub labels: Vec<String>,
    pub homs: Vec<HomGroup>,
    pub comp: Vec<Vec<ElementVector>>,
    pub identities: Vec<ElementVector>,
}

/// One failed check found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    Shape(String),
    OrderCompatibility { source: String, middle: String, target: String, outer: usize, inner: usize },
    Identity { object: String, basis: String, side: &'static str },
    Associativity { objects: [String; 4], basis: [usize; 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::OrderCompatibility { source, middle, target, outer, inner } => write!(
                f,
                "order compatibility: e{outer}∘e{inner} in {source}->{middle}->{target}"
            ),
            Violation::Identity { object, basis, side } => {
                write!(f, "identity law ({side}) fails at {object} for basis {basis}")
            }
            Violation::Associativity { objects, basis } => write!(
                f,
                "associativity fails at {}->{}->{}->{} basis (k={}, j={}, i={})",
                objects[0], objects[1], objects[2], objects[3], basis[0], basis[1], basis[2]
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub triples_checked: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn n_objects(data: &CategoryData) -> usize {
    data.labels.len()
}

fn hom_of(data: &CategoryData, a: usize, b: usize) -> &HomGroup {
    &data.homs[a * n_objects(data) + b]
}

fn raw_compose(data: &CategoryData, a: usize, b: usize, c: usize, g: &[u64], f: &[u64]) -> ElementVector {
    let n = n_objects(data);
    let table = &data.comp[(a * n + b) * n + c];
    let target = &hom_of(data, a, c).orders;
    let rab = hom_of(data, a, b).rank();
    let mut acc = target.zero();
    for (j, &gj) in g.iter().enumerate() {
        if gj == 0 {
            continue;
        }
        for (i, &fi) in f.iter().enumerate() {
            if fi == 0 {
                continue;
            }
            let s = (gj as u128 * fi as u128 % data.ring.modulus() as u128) as u64;
            acc = target.add(&acc, &target.scale(s, &table[j * rab + i]));
        }
    }
    acc
}

/// Checks shapes, order compatibility, identity laws and associativity on
/// every basis triple.
pub fn validate(data: &CategoryData) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = n_objects(data);
    let m = data.ring.modulus();
    if data.homs.len() != n * n || data.comp.len() != n * n * n || data.identities.len() != n {
        report.violations.push(Violation::Shape("table sizes do not match object count".into()));
        return report;
    }
    let mut labels = data.labels.clone();
    labels.sort();
    labels.dedup();
    if labels.len() != n {
        report.violations.push(Violation::Shape("object labels are not unique".into()));
    }
    for a in 0..n {
        for b in 0..n {
            let h = hom_of(data, a, b);
            if h.source != ObjectId(a) || h.target != ObjectId(b) {
                report.violations.push(Violation::Shape(format!("hom ({a},{b}) has wrong endpoints")));
            }
            if h.basis_labels.len() != h.rank() {
                report.violations.push(Violation::Shape(format!("hom ({a},{b}) label count")));
            }
            if h.orders.orders().iter().any(|&d| m % d != 0) {
                report.violations.push(Violation::Shape(format!("hom ({a},{b}) order does not divide {m}")));
            }
        }
        if hom_of(data, a, a).orders.check(&data.identities[a]).is_err() {
            report.violations.push(Violation::Shape(format!("identity of {} malformed", data.labels[a])));
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let table = &data.comp[(a * n + b) * n + c];
                let (rab, rbc) = (hom_of(data, a, b).rank(), hom_of(data, b, c).rank());
                let hac = &hom_of(data, a, c).orders;
                if table.len() != rab * rbc {
                    report.violations.push(Violation::Shape(format!("composition table ({a},{b},{c}) size")));
                    continue;
                }
                for j in 0..rbc {
                    for i in 0..rab {
                        let e = &table[j * rab + i];
                        let di = hom_of(data, a, b).orders.orders()[i];
                        let dj = hom_of(data, b, c).orders.orders()[j];
                        if hac.check(e).is_err()
                            || !hac.scale(di, e).is_zero()
                            || !hac.scale(dj, e).is_zero()
                        {
                            report.violations.push(Violation::OrderCompatibility {
                                source: data.labels[a].clone(),
                                middle: data.labels[b].clone(),
                                target: data.labels[c].clone(),
                                outer: j,
                                inner: i,
                            });
                        }
                    }
                }
            }
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    for a in 0..n {
        for b in 0..n {
            let h = hom_of(data, a, b);
            for i in 0..h.rank() {
                let e = h.orders.unit(i);
                if raw_compose(data, a, b, b, &data.identities[b].0, &e.0) != e {
                    report.violations.push(Violation::Identity {
                        object: data.labels[b].clone(),
                        basis: h.basis_labels[i].clone(),
                        side: "left",
                    });
                }
                if raw_compose(data, a, a, b, &e.0, &data.identities[a].0) != e {
                    report.violations.push(Violation::Identity {
                        object: data.labels[a].clone(),
                        basis: h.basis_labels[i].clone(),
                        side: "right",
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let rab = hom_of(data, a, b).rank();
            if rab == 0 {
                continue;
            }
            for c in 0..n {
                let rbc = hom_of(data, b, c).rank();
                if rbc == 0 {
                    continue;
                }
                for d in 0..n {
                    let rcd = hom_of(data, c, d).rank();
                    for k in 0..rcd {
                        let ek = hom_of(data, c, d).orders.unit(k);
                        for j in 0..rbc {
                            let ej = hom_of(data, b, c).orders.unit(j);
                            let kj = raw_compose(data, b, c, d, &ek.0, &ej.0);
                            for i in 0..rab {
                                let ei = hom_of(data, a, b).orders.unit(i);
                                report.triples_checked += 1;
                                let left = raw_compose(data, a, b, d, &kj.0, &ei.0);
                                let ji = raw_compose(data, a, b, c, &ej.0, &ei.0);
                                let right = raw_compose(data, a, c, d, &ek.0, &ji.0);
                                if left != right {
                                    report.violations.push(Violation::Associativity {
                                        objects: [
                                            data.labels[a].clone(),
                                            data.labels[b].clone(),
                                            data.labels[c].clone(),
                                            data.labels[d].clone(),
                                        ],
                                        basis: [k, j, i],
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// A validated finite linear category. Immutable once constructed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteLinearCategory {
    data: CategoryData,
}

impl FiniteLinearCategory {
    /// Seals `data` after validation.
    pub fn new(data: CategoryData) -> Result<Self> {
        let report = validate(&data);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidCategory(format!(
                "{v} ({} violation(s))",
                report.violations.len()
            )));
        }
        Ok(Self { data })
    }

    pub fn data(&self) -> &CategoryData {
        &self.data
    }

    pub fn ring(&self) -> ResidueRing {
        self.data.ring
    }

    pub fn modulus(&self) -> u64 {
        self.data.ring.modulus()
    }

    pub fn object_count(&self) -> usize {
        self.data.labels.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.object_count()).map(ObjectId)
    }

    pub fn label(&self, a: ObjectId) -> &str {
        &self.data.labels[a.0]
    }

    pub fn object(&self, label: &str) -> Result<ObjectId> {
        self.data
            .labels
            .iter()
            .position(|l| l == label)
            .map(ObjectId)
            .ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    fn check_object(&self, a: ObjectId) -> Result<()> {
        if a.0 < self.object_count() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{}", a.0)))
        }
    }

    pub fn hom_group(&self, a: ObjectId, b: ObjectId) -> &HomGroup {
        hom_of(&self.data, a.0, b.0)
    }

    pub fn hom(&self, a: ObjectId, b: ObjectId) -> &OrderVector {
        &self.hom_group(a, b).orders
    }

    pub fn rank(&self, a: ObjectId, b: ObjectId) -> usize {
        self.hom(a, b).rank()
    }

    /// Total number of morphisms `Σ |Hom(A,B)|`.
    pub fn morphism_count(&self) -> u128 {
        self.objects()
            .flat_map(|a| self.objects().map(move |b| (a, b)))
            .map(|(a, b)| self.hom(a, b).group_order())
            .sum()
    }

    pub fn morphism(&self, a: ObjectId, b: ObjectId, coords: ElementVector) -> Result<Morphism> {
        self.check_object(a)?;
        self.check_object(b)?;
        self.hom(a, b).check(&coords)?;
        Ok(Morphism { source: a, target: b, coords })
    }

    pub fn morphism_from_ints(&self, a: ObjectId, b: ObjectId, coords: &[i64]) -> Result<Morphism> {
        self.check_object(a)?;
        self.check_object(b)?;
        let coords = self.hom(a, b).element(coords)?;
        Ok(Morphism { source: a, target: b, coords })
    }

    pub fn identity(&self, a: ObjectId) -> Morphism {
        Morphism { source: a, target: a, coords: self.data.identities[a.0].clone() }
    }

    pub fn zero_morphism(&self, a: ObjectId, b: ObjectId) -> Morphism {
        Morphism { source: a, target: b, coords: self.hom(a, b).zero() }
    }

    pub fn basis_morphism(&self, a: ObjectId, b: ObjectId, i: usize) -> Morphism {
        Morphism { source: a, target: b, coords: self.hom(a, b).unit(i) }
    }

    pub fn basis(&self, a: ObjectId, b: ObjectId) -> Vec<Morphism> {
        (0..self.rank(a, b)).map(|i| self.basis_morphism(a, b, i)).collect()
    }

    /// Every basis morphism of every Hom-group, in declaration order.
    pub fn all_basis_morphisms(&self) -> Vec<Morphism> {
        let mut out = Vec::new();
        for a in self.objects() {
            for b in self.objects() {
                out.extend(self.basis(a, b));
            }
        }
        out
    }

    /// Enumerates `Hom(a, b)`; fails if its order exceeds `cap`.
    pub fn all_morphisms(&self, a: ObjectId, b: ObjectId, cap: u128) -> Result<Vec<Morphism>> {
        let order = self.hom(a, b).group_order();
        if order > cap {
            return Err(Error::EnumerationCapExceeded { order, cap });
        }
        Ok(self
            .hom(a, b)
            .elements()
            .map(|coords| Morphism { source: a, target: b, coords })
            .collect())
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::Composability(format!(
                "{} -> {} then {} -> {}",
                self.label(f.source),
                self.label(f.target),
                self.label(g.source),
                self.label(g.target)
            )));
        }
        Ok(Morphism {
            source: f.source,
            target: g.target,
            coords: raw_compose(&self.data, f.source.0, f.target.0, g.target.0, &g.coords.0, &f.coords.0),
        })
    }

    pub fn add(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Composability("adding morphisms with different endpoints".into()));
        }
        Ok(Morphism {
            source: f.source,
            target: f.target,
            coords: self.hom(f.source, f.target).add(&f.coords, &g.coords),
        })
    }

    pub fn sub(&self, f: &Morphism, g: &Morphism) -> Result<Morphism> {
        self.add(f, &self.neg(g))
    }

    pub fn neg(&self, f: &Morphism) -> Morphism {
        Morphism {
            source: f.source,
            target: f.target,
            coords: self.hom(f.source, f.target).neg(&f.coords),
        }
    }

    pub fn scale(&self, s: u64, f: &Morphism) -> Morphism {
        Morphism {
            source: f.source,
            target: f.target,
            coords: self.hom(f.source, f.target).scale(s, &f.coords),
        }
    }

    /// `φ ↦ g ∘ φ` as a map `Hom(x, dom g) → Hom(x, cod g)`.
    pub fn post_compose_hom(&self, g: &Morphism, x: ObjectId) -> GroupHom {
        let src = self.hom(x, g.source).clone();
        let cols = (0..src.rank())
            .map(|i| raw_compose(&self.data, x.0, g.source.0, g.target.0, &g.coords.0, &src.unit(i).0))
            .collect();
        GroupHom::new(src, self.hom(x, g.target).clone(), cols).expect("composition is bilinear")
    }

    /// `ψ ↦ ψ ∘ f` as a map `Hom(cod f, z) → Hom(dom f, z)`.
    pub fn pre_compose_hom(&self, f: &Morphism, z: ObjectId) -> GroupHom {
        let src = self.hom(f.target, z).clone();
        let cols = (0..src.rank())
            .map(|j| raw_compose(&self.data, f.source.0, f.target.0, z.0, &src.unit(j).0, &f.coords.0))
            .collect();
        GroupHom::new(src, self.hom(f.source, z).clone(), cols).expect("composition is bilinear")
    }

    /// The opposite category: `Hom^op(A,B) = Hom(B,A)`, composition reversed.
    pub fn opposite(&self) -> FiniteLinearCategory {
        let n = self.object_count();
        let d = &self.data;
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let h = hom_of(d, b, a);
                homs.push(HomGroup {
                    source: ObjectId(a),
                    target: ObjectId(b),
                    orders: h.orders.clone(),
                    basis_labels: h.basis_labels.clone(),
                });
            }
        }
        let mut comp = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // g^op ∘ f^op = (f ∘ g)^op with g: c -> b, f: b -> a
                    let r_op_ab = hom_of(d, b, a).rank();
                    let r_op_bc = hom_of(d, c, b).rank();
                    let orig = &d.comp[(c * n + b) * n + a];
                    let r_cb = hom_of(d, c, b).rank();
                    let mut table = Vec::with_capacity(r_op_ab * r_op_bc);
                    for j in 0..r_op_bc {
                        for i in 0..r_op_ab {
                            table.push(orig[i * r_cb + j].clone());
                        }
                    }
                    comp.push(table);
                }
            }
        }
        FiniteLinearCategory {
            data: CategoryData {
                ring: d.ring,
                labels: d.labels.clone(),
                homs,
                comp,
                identities: d.identities.clone(),
            },
        }
    }

    /// The morphism `f` read in the opposite category.
    pub fn op_morphism(&self, f: &Morphism) -> Morphism {
        Morphism { source: f.target, target: f.source, coords: f.coords.clone() }
    }

    pub fn describe(&self, f: &Morphism) -> String {
        format!("{}->{} {}", self.label(f.source), self.label(f.target), f.coords)
    }

    /// `f` as a combination of basis labels, e.g. `j` or `2·e00+e10`.
    pub fn expression(&self, f: &Morphism) -> String {
        let labels = &self.hom_group(f.source, f.target).basis_labels;
        let terms: Vec<String> = f
            .coords
            .0
            .iter()
            .zip(labels)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, l)| if c == 1 { l.clone() } else { format!("{c}·{l}") })
            .collect();
        if terms.is_empty() {
            format!("0:{}->{}", self.label(f.source), self.label(f.target))
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_category(m: u64) -> FiniteLinearCategory {
        let ring = ResidueRing::new(m).unwrap();
        let orders = OrderVector::over(ring, vec![m]).unwrap();
        FiniteLinearCategory::new(CategoryData {
            ring,
            labels: vec!["R".into()],
            homs: vec![HomGroup {
                source: ObjectId(0),
                target: ObjectId(0),
                orders,
                basis_labels: vec!["1".into()],
            }],
            comp: vec![vec![ElementVector::new(vec![1])]],
            identities: vec![ElementVector::new(vec![1])],
        })
        .unwrap()
    }

    #[test]
    fn one_object_ring_is_valid() {
        let c = ring_category(6);
        assert_eq!(c.morphism_count(), 6);
        let r = ObjectId(0);
        let f = c.morphism_from_ints(r, r, &[5]).unwrap();
        assert_eq!(c.compose(&c.identity(r), &f).unwrap(), f);
        assert_eq!(c.compose(&f, &f).unwrap().coords().coords(), &[1]);
        assert_eq!(c.opposite(), c);
    }

    #[test]
    fn corrupted_constant_is_located() {
        let ring = ResidueRing::new(4).unwrap();
        let mut data = build_module_category(4, &[("Z2", vec![2]), ("Z4", vec![4])])
            .unwrap()
            .category()
            .data()
            .clone();
        // Hom(Z4,Z4) ∘ Hom(Z4,Z4): replace id∘id = id by 2
        let n = 2;
        data.comp[(n + 1) * n + 1][0] = ElementVector::new(vec![2]);
        let report = validate(&data);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Identity { .. } | Violation::Associativity { .. })));
        assert!(FiniteLinearCategory::new(data).is_err());
        let _ = ring;
    }

    #[test]
    fn composability_error() {
        let m = build_module_category(4, &[("Z2", vec![2]), ("Z4", vec![4])]).unwrap();
        let c = m.category();
        let (z2, z4) = (ObjectId(0), ObjectId(1));
        let f = c.basis_morphism(z2, z4, 0);
        assert!(matches!(c.compose(&f, &f), Err(Error::Composability(_))));
    }

    #[test]
    fn enumeration_sizes() {
        let m = build_module_category(4, &[("0", vec![]), ("Z4", vec![4])]).unwrap();
        let c = m.category();
        let (zero, z4) = (ObjectId(0), ObjectId(1));
        assert_eq!(c.all_morphisms(z4, z4, 4096).unwrap().len(), 4);
        assert_eq!(c.all_morphisms(zero, z4, 4096).unwrap(), vec![c.zero_morphism(zero, z4)]);
        assert!(matches!(
            c.all_morphisms(z4, z4, 3),
            Err(Error::EnumerationCapExceeded { order: 4, cap: 3 })
        ));
        let f = c.basis_morphism(z4, z4, 0);
        assert!(c.compose(&f, &c.zero_morphism(zero, z4)).unwrap().is_zero());
        assert!(c.compose(&c.zero_morphism(z4, z4), &f).unwrap().is_zero());
    }

    #[test]
    fn opposite_is_involution_and_valid() {
        let m = build_module_category(4, &[("Z2", vec![2]), ("Z4", vec![4]), ("Z2+Z4", vec![2, 4])]).unwrap();
        let c = m.category();
        let op = c.opposite();
        assert!(validate(op.data()).is_valid());
        assert_eq!(&op.opposite(), c);
    }
}
