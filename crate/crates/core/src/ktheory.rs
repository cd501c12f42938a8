//! The homotopy category of a declared finite list of complexes: chain-map
//! categories, cones, the null-homotopic ideal, and the cokernel
//! counterexample in `K`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{
    are_homotopic, chain_map_group, homotopy_map, validate_complex, verify_homotopy, ChainComplex, ChainMap,
    GradedLayout,
};
use crate::ideals::{coker, cokernel_exists, quotient_category, saturate, Ideal, QuotientCategory, Side};
use crate::lincat::{CategoryData, FiniteLinearCategory, HomGroup, ModuleModel, Morphism, ObjectId};
use crate::linalg::{ElementVector, GroupHom, InvariantFactors, OrderVector, SubgroupBasis, Subquotient};

/// Complexes over a base category as objects, chain maps as morphisms.
#[derive(Clone, Debug)]
pub struct ComplexesCategory<'b> {
    base: &'b FiniteLinearCategory,
    complexes: Vec<ChainComplex>,
    layouts: Vec<GradedLayout>,
    presentations: Vec<Subquotient>,
    category: FiniteLinearCategory,
}

pub fn complexes_category<'b>(
    base: &'b FiniteLinearCategory,
    complexes: &[(String, ChainComplex)],
) -> Result<ComplexesCategory<'b>> {
    for (name, c) in complexes {
        let report = validate_complex(base, c)?;
        if !report.is_valid() {
            return Err(Error::InvalidComplex(format!("{name}: d∘d ≠ 0 at {:?}", report.failures)));
        }
    }
    let n = complexes.len();
    let mut layouts = Vec::with_capacity(n * n);
    let mut presentations = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for (a, (_, c)) in complexes.iter().enumerate() {
        for (b, (_, d)) in complexes.iter().enumerate() {
            let (group, layout) = chain_map_group(base, c, d)?;
            let zero = SubgroupBasis::zero(group.ambient());
            let sq = Subquotient::new(group, zero)?;
            let labels = sq.lifts().iter().map(|v| format!("<{v}>")).collect();
            homs.push(HomGroup { source: ObjectId(a), target: ObjectId(b), orders: sq.orders().clone(), basis_labels: labels });
            layouts.push(layout);
            presentations.push(sq);
        }
    }
    let rep = |a: usize, b: usize, k: usize| -> Result<ChainMap> {
        let layout = &layouts[a * n + b];
        ChainMap::new(
            base,
            complexes[a].1.clone(),
            complexes[b].1.clone(),
            layout.split(base, &presentations[a * n + b].lifts()[k]),
        )
    };
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (rab, rbc) = (homs[a * n + b].rank(), homs[b * n + c].rank());
                let mut table = Vec::with_capacity(rab * rbc);
                for j in 0..rbc {
                    let g = rep(b, c, j)?;
                    for i in 0..rab {
                        let gf = g.compose(base, &rep(a, b, i)?)?;
                        let v = layouts[a * n + c].join(base, gf.components());
                        table.push(presentations[a * n + c].project(&v)?);
                    }
                }
                comp.push(table);
            }
        }
    }
    let identities = (0..n)
        .map(|a| {
            let id = ChainMap::identity(base, &complexes[a].1);
            presentations[a * n + a].project(&layouts[a * n + a].join(base, id.components()))
        })
        .collect::<Result<Vec<_>>>()?;
    let data = CategoryData {
        ring: base.ring(),
        labels: complexes.iter().map(|(name, _)| name.clone()).collect(),
        homs,
        comp,
        identities,
    };
    let category = FiniteLinearCategory::new(data)?;
    Ok(ComplexesCategory {
        base,
        complexes: complexes.iter().map(|(_, c)| c.clone()).collect(),
        layouts,
        presentations,
        category,
    })
}

impl<'b> ComplexesCategory<'b> {
    pub fn category(&self) -> &FiniteLinearCategory {
        &self.category
    }

    pub fn base(&self) -> &'b FiniteLinearCategory {
        self.base
    }

    pub fn complexes(&self) -> &[ChainComplex] {
        &self.complexes
    }

    pub fn complex(&self, a: ObjectId) -> &ChainComplex {
        &self.complexes[a.0]
    }

    fn idx(&self, a: ObjectId, b: ObjectId) -> usize {
        a.0 * self.complexes.len() + b.0
    }

    /// The chain map represented by a morphism.
    pub fn chain_map(&self, f: &Morphism) -> Result<ChainMap> {
        let k = self.idx(f.source(), f.target());
        let v = self.presentations[k].lift(f.coords());
        ChainMap::new(
            self.base,
            self.complex(f.source()).clone(),
            self.complex(f.target()).clone(),
            self.layouts[k].split(self.base, &v),
        )
    }

    /// The morphism `a → b` representing a chain map between the declared complexes.
    pub fn morphism(&self, a: ObjectId, b: ObjectId, f: &ChainMap) -> Result<Morphism> {
        if f.source() != self.complex(a) || f.target() != self.complex(b) {
            return Err(Error::InvalidChainMap("endpoints differ from the declared complexes".into()));
        }
        let k = self.idx(a, b);
        let coords = self.presentations[k].project(&self.layouts[k].join(self.base, f.components()))?;
        self.category.morphism(a, b, coords)
    }
}

/// Counts chain maps `C → D` by enumerating every graded family.
pub fn brute_force_chain_map_count(
    cat: &FiniteLinearCategory,
    c: &ChainComplex,
    d: &ChainComplex,
    cap: u128,
) -> Result<u128> {
    let layout = GradedLayout::new(cat, c, d, 0);
    let order = layout.orders.group_order();
    if order > cap {
        return Err(Error::EnumerationCapExceeded { order, cap });
    }
    let mut count = 0;
    for v in layout.orders.elements() {
        if ChainMap::new(cat, c.clone(), d.clone(), layout.split(cat, &v)).is_ok() {
            count += 1;
        }
    }
    Ok(count)
}

fn block(model: &ModuleModel, f: Option<&Morphism>, src: &OrderVector, tgt: &OrderVector) -> GroupHom {
    match f {
        Some(f) => model.matrix(f),
        None => GroupHom::zero(src, tgt),
    }
}

fn group_or_trivial(model: &ModuleModel, x: Option<ObjectId>) -> OrderVector {
    x.map(|x| model.group(x)).unwrap_or_default()
}

fn decomposition_or_empty(model: &ModuleModel, x: Option<ObjectId>) -> Vec<u64> {
    x.map(|x| model.decomposition(x).to_vec()).unwrap_or_default()
}

/// `Cone(u)_n = X_{n−1} ⊕ Y_n` with `d(x, y) = (−d_X x, u x + d_Y y)`; each
/// sum must be a declared object whose decomposition lists the `X` part first.
pub fn cone(model: &ModuleModel, u: &ChainMap) -> Result<ChainComplex> {
    let cat = model.category();
    let (x, y) = (u.source(), u.target());
    let lo = (x.lo() + 1).min(y.lo());
    let hi = (x.hi() + 1).max(y.hi());
    let mut objects = Vec::new();
    for n in lo..=hi {
        let mut dec = decomposition_or_empty(model, x.object(n - 1));
        dec.extend(decomposition_or_empty(model, y.object(n)));
        let obj = model.find_object(&dec).ok_or_else(|| {
            let parts: Vec<String> = dec.iter().map(|d| format!("Z{d}")).collect();
            Error::MissingDirectSum(format!("degree {n}: {}", if parts.is_empty() { "0".into() } else { parts.join("+") }))
        })?;
        objects.push(obj);
    }
    let mut ds = Vec::new();
    for n in lo + 1..=hi {
        let (xs, ys) = (group_or_trivial(model, x.object(n - 1)), group_or_trivial(model, y.object(n)));
        let (xt, yt) = (group_or_trivial(model, x.object(n - 2)), group_or_trivial(model, y.object(n - 1)));
        let dx = block(model, x.differential(n - 1), &xs, &xt);
        let un = block(model, u.component(n - 1), &xs, &yt);
        let dy = block(model, y.differential(n), &ys, &yt);
        let (src, tgt) = (xs.concat(&ys), xt.concat(&yt));
        let mut cols = Vec::with_capacity(src.rank());
        for i in 0..xs.rank() {
            let e = xs.unit(i);
            let mut v = xt.neg(&dx.apply(&e)).coords().to_vec();
            v.extend_from_slice(un.apply(&e).coords());
            cols.push(ElementVector::new(v));
        }
        for j in 0..ys.rank() {
            let mut v = vec![0; xt.rank()];
            v.extend_from_slice(dy.apply(&ys.unit(j)).coords());
            cols.push(ElementVector::new(v));
        }
        let h = GroupHom::new(src, tgt, cols)?;
        let (a, b) = (objects[(n - lo) as usize], objects[(n - 1 - lo) as usize]);
        ds.push(model.morphism_from_hom(a, b, &h)?);
    }
    let c = ChainComplex::new(lo, objects, ds)?;
    if !validate_complex(cat, &c)?.is_valid() {
        return Err(Error::InvalidComplex("cone differential does not square to zero".into()));
    }
    Ok(c)
}

/// The chain map `Y → Cone(u)` including `Y_n` as the second summand.
pub fn cone_inclusion(model: &ModuleModel, u: &ChainMap, cone: &ChainComplex) -> Result<ChainMap> {
    let cat = model.category();
    let (x, y) = (u.source(), u.target());
    let mut comps = BTreeMap::new();
    for n in y.degrees() {
        let (Some(yn), Some(cn)) = (y.object(n), cone.object(n)) else { continue };
        let xs = group_or_trivial(model, x.object(n - 1));
        let ys = model.group(yn);
        let cols = (0..ys.rank())
            .map(|j| {
                let mut v = vec![0; xs.rank()];
                v.extend_from_slice(ys.unit(j).coords());
                ElementVector::new(v)
            })
            .collect();
        let h = GroupHom::new(ys, model.group(cn), cols)?;
        comps.insert(n, model.morphism_from_hom(yn, cn, &h)?);
    }
    ChainMap::new(cat, y.clone(), cone.clone(), comps)
}

/// The two-sided ideal of null-homotopic chain maps. Its components are the
/// images of `s ↦ ds + sd`; closure under composition is verified by
/// re-saturating.
pub fn null_homotopic_ideal<'c>(cc: &'c ComplexesCategory<'_>) -> Result<Ideal<'c>> {
    let cat = &cc.category;
    let mut generators = Vec::new();
    let mut components = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let (map, _, equations) = homotopy_map(cc.base, cc.complex(a), cc.complex(b))?;
            let k = cc.idx(a, b);
            debug_assert_eq!(equations.orders, cc.layouts[k].orders);
            let rows = map
                .image()
                .rows()
                .iter()
                .map(|r| cc.presentations[k].project(r))
                .collect::<Result<Vec<_>>>()?;
            let sub = SubgroupBasis::howell_form(&rows, cat.hom(a, b))?;
            for r in sub.rows() {
                generators.push(cat.morphism(a, b, r.clone())?);
            }
            components.push(sub);
        }
    }
    let ideal = saturate(cat, Side::TwoSided, &generators);
    if ideal.components() != components.as_slice() {
        return Err(Error::WellDefinedness("null-homotopic maps are not closed under composition".into()));
    }
    Ok(ideal)
}

/// `K = Comp / null-homotopic`, on the declared complexes.
pub fn homotopy_category(cc: &ComplexesCategory<'_>) -> Result<QuotientCategory> {
    quotient_category(&null_homotopic_ideal(cc)?)
}

/// A cokernel of `f` found by checking the universal property directly: some
/// `c: cod f → Q` with `c∘f = 0` through which every `h` with `h∘f = 0`
/// factors uniquely. Every candidate and factorization is enumerated.
pub fn universal_cokernel_search(cat: &FiniteLinearCategory, f: &Morphism, cap: u128) -> Result<Option<Morphism>> {
    let y = f.target();
    let mut killers: Vec<Vec<Morphism>> = Vec::new();
    for z in cat.objects() {
        let hs = cat.all_morphisms(y, z, cap)?;
        let mut keep = Vec::new();
        for h in hs {
            if cat.compose(&h, f)?.is_zero() {
                keep.push(h);
            }
        }
        killers.push(keep);
    }
    for q in cat.objects() {
        'candidate: for c in killers[q.0].clone() {
            for z in cat.objects() {
                let ts = cat.all_morphisms(q, z, cap)?;
                for h in &killers[z.0] {
                    let mut hits = 0;
                    for t in &ts {
                        if &cat.compose(t, &c)? == h {
                            hits += 1;
                            if hits > 1 {
                                continue 'candidate;
                            }
                        }
                    }
                    if hits != 1 {
                        continue 'candidate;
                    }
                }
            }
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomRow {
    pub source: String,
    pub target: String,
    pub chain_maps: InvariantFactors,
    pub homotopy_classes: InvariantFactors,
}

/// Hom-groups of `Comp` and `K` between every pair of declared complexes.
pub fn hom_table(cc: &ComplexesCategory<'_>, k: &QuotientCategory) -> Vec<HomRow> {
    let (c, kc) = (cc.category(), k.category());
    let mut rows = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            rows.push(HomRow {
                source: c.label(a).to_string(),
                target: c.label(b).to_string(),
                chain_maps: InvariantFactors::from_cyclic_orders(c.hom(a, b).orders()),
                homotopy_classes: InvariantFactors::from_cyclic_orders(kc.hom(a, b).orders()),
            });
        }
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoReport {
    pub modulus: u64,
    pub declared: Vec<String>,
    pub homs: Vec<HomRow>,
    /// (i) `q∘u` is null-homotopic; the witness is `s_n: X_n → Cone_{n+1}`.
    pub q_u_null_homotopic: bool,
    pub witness: Vec<(i64, String)>,
    pub witness_verified: bool,
    /// (ii) the left ideal `Coker([u])` in `K`.
    pub coker_ideal: String,
    /// Morphisms in the ideal, counting the zero morphism of every Hom.
    pub coker_ideal_size: u128,
    pub coker_ideal_nonzero: bool,
    pub q_in_coker_ideal: bool,
    /// (iii) classical cokernel of `[u]` in `K`, among the declared objects.
    pub k_free_principal_generator: Option<String>,
    pub k_universal_cokernel: Option<String>,
    /// (iv) classical cokernel of `u` in the base model.
    pub base_free_principal_generator: Option<String>,
    pub base_universal_cokernel: Option<String>,
}

impl BoReport {
    /// The expected outcome for a non-split image: (i), (ii) hold, `K` has no
    /// cokernel among the declared objects, the base model has one.
    pub fn confirms_counterexample(&self) -> bool {
        self.q_u_null_homotopic
            && self.witness_verified
            && self.coker_ideal_nonzero
            && self.q_in_coker_ideal
            && self.k_free_principal_generator.is_none()
            && self.k_universal_cokernel.is_none()
            && self.base_free_principal_generator.is_some()
            && self.base_universal_cokernel.is_some()
    }
}

/// Runs the cokernel counterexample for `u: X → Y` in the base model, with
/// `X`, `Y` concentrated in degree 0, `Cone(u)`, and the given auditors as
/// declared complexes.
pub fn bo_counterexample(
    model: &ModuleModel,
    u: &Morphism,
    auditors: &[(String, ChainComplex)],
    cap: u128,
) -> Result<BoReport> {
    let base = model.category();
    let (x, y) = (ChainComplex::concentrated(u.source(), 0), ChainComplex::concentrated(u.target(), 0));
    let uc = ChainMap::new(base, x.clone(), y.clone(), [(0, u.clone())].into_iter().collect())?;
    let cn = cone(model, &uc)?;
    let q = cone_inclusion(model, &uc, &cn)?;
    let qu = q.compose(base, &uc)?;
    let zero = ChainMap::zero(base, &x, &cn);
    let witness = are_homotopic(base, &qu, &zero)?;
    let witness_verified = match &witness {
        Some(s) => verify_homotopy(base, &qu, &zero, s)?,
        None => false,
    };
    let mut declared = vec![("X".to_string(), x), ("Y".to_string(), y), ("Cone(u)".to_string(), cn)];
    declared.extend(auditors.iter().cloned());
    let cc = complexes_category(base, &declared)?;
    let kq = homotopy_category(&cc)?;
    let k = kq.category();
    let (xi, yi, ci) = (ObjectId(0), ObjectId(1), ObjectId(2));
    let ku = kq.project(&cc.morphism(xi, yi, &uc)?)?;
    let kq_map = kq.project(&cc.morphism(yi, ci, &q)?)?;
    let ck = coker(k, &ku);
    let show = |cat: &FiniteLinearCategory, f: Option<Morphism>| f.map(|f| cat.describe(&f));
    Ok(BoReport {
        modulus: base.modulus(),
        declared: declared.iter().map(|(n, _)| n.clone()).collect(),
        homs: hom_table(&cc, &kq),
        q_u_null_homotopic: witness.is_some(),
        witness: witness
            .unwrap_or_default()
            .iter()
            .map(|(n, s)| (*n, base.describe(s)))
            .collect(),
        witness_verified,
        coker_ideal: ck.describe(),
        coker_ideal_size: ck.size(),
        coker_ideal_nonzero: !ck.is_zero(),
        q_in_coker_ideal: ck.contains(&kq_map),
        k_free_principal_generator: show(k, cokernel_exists(k, &ku, cap)?),
        k_universal_cokernel: show(k, universal_cokernel_search(k, &ku, cap)?),
        base_free_principal_generator: show(base, cokernel_exists(base, u, cap)?),
        base_universal_cokernel: show(base, universal_cokernel_search(base, u, cap)?),
    })
}

/// Checks that concentrating in degree 0 identifies `Hom(M, N)` with the chain
/// maps `M[0] → N[0]` and preserves composition, for every declared object.
pub fn degree_zero_embedding_check(base: &FiniteLinearCategory) -> Result<bool> {
    let declared: Vec<(String, ChainComplex)> = base
        .objects()
        .map(|a| (format!("{}[0]", base.label(a)), ChainComplex::concentrated(a, 0)))
        .collect();
    let cc = complexes_category(base, &declared)?;
    let embed = |f: &Morphism| -> Result<Morphism> {
        let (a, b) = (f.source(), f.target());
        let m = ChainMap::new(base, cc.complex(a).clone(), cc.complex(b).clone(), [(0, f.clone())].into_iter().collect())?;
        cc.morphism(a, b, &m)
    };
    for a in base.objects() {
        for b in base.objects() {
            if cc.category().hom(a, b).group_order() != base.hom(a, b).group_order()
                || InvariantFactors::from_cyclic_orders(cc.category().hom(a, b).orders())
                    != InvariantFactors::from_cyclic_orders(base.hom(a, b).orders())
            {
                return Ok(false);
            }
        }
    }
    for a in base.objects() {
        for b in base.objects() {
            for c in base.objects() {
                for f in base.basis(a, b) {
                    for g in base.basis(b, c) {
                        let lhs = embed(&base.compose(&g, &f)?)?;
                        let rhs = cc.category().compose(&embed(&g)?, &embed(&f)?)?;
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
