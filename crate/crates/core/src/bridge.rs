//! Classical homology inside module-category models and its comparison with
//! the ideal-theoretic homology: projectivity, representability on
//! projectives, the generator corollary, and the connecting sequence via the
//! snake map.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{right_homology, ChainComplex, ChainMap};
use crate::lincat::{ModuleModel, Morphism, ObjectId};
use crate::linalg::{
    hom_invariants, prime_powers, ElementVector, GroupHom, InvariantFactors, OrderVector, SubgroupBasis, Subquotient,
};

/// Invariant factors of `H_n = ker d_n / im d_{n+1}` on the underlying groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalHomology {
    pub degree: i64,
    pub invariants: InvariantFactors,
}

fn group_at(model: &ModuleModel, c: &ChainComplex, n: i64) -> OrderVector {
    c.object(n).map(|x| model.group(x)).unwrap_or_default()
}

fn differential_at(model: &ModuleModel, c: &ChainComplex, n: i64) -> GroupHom {
    match c.differential(n) {
        Some(d) => model.matrix(d),
        None => GroupHom::zero(&group_at(model, c, n), &group_at(model, c, n - 1)),
    }
}

/// `Z_n / B_n` as a subquotient of the underlying group of `C_n`; trivial
/// outside the complex.
pub fn homology_subquotient(model: &ModuleModel, c: &ChainComplex, n: i64) -> Result<Subquotient> {
    let z = differential_at(model, c, n).kernel();
    let b = differential_at(model, c, n + 1).image();
    Subquotient::new(z, b).map_err(|_| Error::InvalidComplex(format!("d_{n} ∘ d_{} ≠ 0", n + 1)))
}

pub fn classical_homology(model: &ModuleModel, c: &ChainComplex, n: i64) -> Result<ClassicalHomology> {
    if !c.contains_degree(n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    Ok(ClassicalHomology { degree: n, invariants: homology_subquotient(model, c, n)?.invariants() })
}

/// Every cyclic factor is a product of full prime-power blocks of `m`.
pub fn is_projective(model: &ModuleModel, p: ObjectId) -> bool {
    let m = model.category().modulus();
    let blocks: BTreeMap<u64, u64> = prime_powers(m).into_iter().collect();
    model
        .decomposition(p)
        .iter()
        .all(|&d| prime_powers(d).into_iter().all(|(q, qk)| blocks.get(&q) == Some(&qk)))
}

/// Brute-force lifting test against every surjection between declared
/// objects: for `g: B ↠ C` and `h: P → C` some `h̃: P → B` has `g ∘ h̃ = h`.
pub fn lifting_oracle(model: &ModuleModel, p: ObjectId, cap: u128) -> Result<bool> {
    let cat = model.category();
    for b in cat.objects() {
        for c in cat.objects() {
            for g in cat.all_morphisms(b, c, cap)? {
                if !model.matrix(&g).is_surjective() {
                    continue;
                }
                let post = cat.post_compose_hom(&g, p);
                if !post.is_surjective() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub degree: i64,
    /// `H^R_n(C)(P)`.
    pub ideal: InvariantFactors,
    /// `Hom(P, H_n(C))` (or `H_n(C)` itself for the generator check).
    pub classical: InvariantFactors,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentabilityReport {
    pub object: String,
    pub rows: Vec<DegreeComparison>,
}

impl RepresentabilityReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

fn compare(model: &ModuleModel, c: &ChainComplex, p: ObjectId) -> Result<RepresentabilityReport> {
    let cat = model.category();
    let mut rows = Vec::new();
    for n in c.degrees() {
        let ideal = right_homology(cat, c, n)?.family.invariants(p);
        let h = classical_homology(model, c, n)?.invariants;
        let classical = hom_invariants(model.decomposition(p), h.factors());
        rows.push(DegreeComparison { degree: n, matches: ideal == classical, ideal, classical });
    }
    Ok(RepresentabilityReport { object: cat.label(p).to_string(), rows })
}

/// Compares `H^R_n(C)(P)` with `Hom(P, H_n(C))` in every degree, for projective `P`.
pub fn representability_check(model: &ModuleModel, c: &ChainComplex, p: ObjectId) -> Result<RepresentabilityReport> {
    if !is_projective(model, p) {
        return Err(Error::NotProjective(model.category().label(p).to_string()));
    }
    compare(model, c, p)
}

/// The first degree where the comparison fails for a possibly non-projective `Q`.
pub fn nonprojective_counterexample_search(
    model: &ModuleModel,
    c: &ChainComplex,
    q: ObjectId,
) -> Result<Option<DegreeComparison>> {
    Ok(compare(model, c, q)?.rows.into_iter().find(|r| !r.matches))
}

/// Compares `H^R_n(C)(U)` with `H_n(C)` for the generator `U = Z/m`.
pub fn generator_corollary_check(model: &ModuleModel, c: &ChainComplex) -> Result<RepresentabilityReport> {
    let m = model.category().modulus();
    let u = model
        .find_object(&[m])
        .ok_or_else(|| Error::UnknownObject(format!("Z/{m}")))?;
    let cat = model.category();
    let mut rows = Vec::new();
    for n in c.degrees() {
        let ideal = right_homology(cat, c, n)?.family.invariants(u);
        let classical = classical_homology(model, c, n)?.invariants;
        rows.push(DegreeComparison { degree: n, matches: ideal == classical, ideal, classical });
    }
    Ok(RepresentabilityReport { object: cat.label(u).to_string(), rows })
}

/// A short exact sequence of complexes `0 → A → B → C → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub f: ChainMap,
    pub g: ChainMap,
}

fn component_matrix(model: &ModuleModel, f: &ChainMap, n: i64) -> GroupHom {
    match f.component(n) {
        Some(m) => model.matrix(m),
        None => GroupHom::zero(&group_at(model, f.source(), n), &group_at(model, f.target(), n)),
    }
}

fn degree_span(ses: &ShortExactSequence) -> (i64, i64) {
    let cs = [ses.f.source(), ses.f.target(), ses.g.target()];
    let lo = cs.iter().map(|c| c.lo()).min().expect("three complexes");
    let hi = cs.iter().map(|c| c.hi()).max().expect("three complexes");
    (lo, hi)
}

impl ShortExactSequence {
    /// Checks composability and degreewise exactness of the underlying groups.
    pub fn new(model: &ModuleModel, f: ChainMap, g: ChainMap) -> Result<Self> {
        if f.target() != g.source() {
            return Err(Error::Composability("f and g do not share the middle complex".into()));
        }
        let ses = Self { f, g };
        let (lo, hi) = degree_span(&ses);
        for n in lo..=hi {
            let (fm, gm) = (component_matrix(model, &ses.f, n), component_matrix(model, &ses.g, n));
            if !fm.is_injective() || fm.image() != gm.kernel() || !gm.is_surjective() {
                return Err(Error::NotExact(format!("degree {n}")));
            }
        }
        Ok(ses)
    }
}

/// The classical connecting map `δ_n: H_n(C) → H_{n−1}(A)` by the snake
/// construction on representatives.
pub fn connecting_map(model: &ModuleModel, ses: &ShortExactSequence, n: i64) -> Result<GroupHom> {
    let (a, b, c) = (ses.f.source(), ses.f.target(), ses.g.target());
    let hc = homology_subquotient(model, c, n)?;
    let ha = homology_subquotient(model, a, n - 1)?;
    let g_n = component_matrix(model, &ses.g, n);
    let f_prev = component_matrix(model, &ses.f, n - 1);
    let d_b = differential_at(model, b, n);
    let mut columns = Vec::with_capacity(hc.orders().rank());
    for z in hc.lifts() {
        let y = g_n.solve(z)?.ok_or_else(|| Error::NotExact(format!("g_{n} not surjective")))?;
        let dy = d_b.apply(&y);
        let x = f_prev
            .solve(&dy)?
            .ok_or_else(|| Error::NotExact(format!("boundary not in the image of f_{}", n - 1)))?;
        columns.push(ha.project(&x)?);
    }
    GroupHom::new(hc.orders().clone(), ha.orders().clone(), columns)
}

/// `Hom(⊕ Z/p_i, H)` as the subgroup `{(h_i) : p_i h_i = 0}` of `H^k`.
fn hom_from(p: &[u64], h: &OrderVector) -> (OrderVector, SubgroupBasis) {
    let mut ambient = OrderVector::trivial();
    for _ in p {
        ambient = ambient.concat(h);
    }
    let r = h.rank();
    let cols = (0..ambient.rank())
        .map(|k| ambient.scale(p[k / r.max(1)], &ambient.unit(k)))
        .collect();
    let mult = GroupHom::new(ambient.clone(), ambient.clone(), cols).expect("scaling is well defined");
    (ambient, mult.kernel())
}

fn block_diagonal(h: &GroupHom, k: usize) -> GroupHom {
    let (s, t) = (h.source(), h.target());
    let mut src = OrderVector::trivial();
    let mut tgt = OrderVector::trivial();
    for _ in 0..k {
        src = src.concat(s);
        tgt = tgt.concat(t);
    }
    let mut cols = Vec::with_capacity(src.rank());
    for block in 0..k {
        for col in h.columns() {
            let mut v = vec![0u64; tgt.rank()];
            v[block * t.rank()..(block + 1) * t.rank()].copy_from_slice(col.coords());
            cols.push(ElementVector::new(v));
        }
    }
    GroupHom::new(src, tgt, cols).expect("blocks are well defined")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceTerm {
    pub label: String,
    pub invariants: InvariantFactors,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectingReport {
    /// How `δ` was obtained.
    pub delta: &'static str,
    pub terms: Vec<SequenceTerm>,
    pub joints_checked: usize,
    pub failures: Vec<String>,
}

impl ConnectingReport {
    pub fn is_exact(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds `… → Hom(P, H_n(A)) → Hom(P, H_n(B)) → Hom(P, H_n(C)) →δ Hom(P, H_{n−1}(A)) → …`
/// and checks exactness at every joint.
pub fn connecting_sequence_check(model: &ModuleModel, ses: &ShortExactSequence, p: ObjectId) -> Result<ConnectingReport> {
    if !is_projective(model, p) {
        return Err(Error::NotProjective(model.category().label(p).to_string()));
    }
    let pd = model.decomposition(p).to_vec();
    let k = pd.len();
    let (a, b, c) = (ses.f.source(), ses.f.target(), ses.g.target());
    let (lo, hi) = degree_span(ses);
    // terms and the maps leaving them, from the top degree down
    let mut terms: Vec<(String, Subquotient)> = Vec::new();
    let mut maps: Vec<GroupHom> = Vec::new();
    for n in (lo - 1..=hi + 1).rev() {
        let (ha, hb, hc) = (
            homology_subquotient(model, a, n)?,
            homology_subquotient(model, b, n)?,
            homology_subquotient(model, c, n)?,
        );
        let fs = Subquotient::induced(&component_matrix(model, &ses.f, n), &ha, &hb)?;
        let gs = Subquotient::induced(&component_matrix(model, &ses.g, n), &hb, &hc)?;
        let delta = connecting_map(model, ses, n)?;
        terms.push((format!("H_{n}(A)"), ha));
        maps.push(fs);
        terms.push((format!("H_{n}(B)"), hb));
        maps.push(gs);
        terms.push((format!("H_{n}(C)"), hc));
        maps.push(delta);
    }
    let homs: Vec<(OrderVector, SubgroupBasis)> = terms.iter().map(|(_, h)| hom_from(&pd, h.orders())).collect();
    let lifted: Vec<GroupHom> = maps.iter().map(|m| block_diagonal(m, k)).collect();
    let mut failures = Vec::new();
    let mut joints = 0;
    for t in 1..terms.len() - 1 {
        joints += 1;
        let incoming = &lifted[t - 1];
        let image_gens: Vec<ElementVector> = homs[t - 1].1.rows().iter().map(|r| incoming.apply(r)).collect();
        let image = SubgroupBasis::howell_form(&image_gens, &homs[t].0)?;
        let kernel = lifted[t].kernel().intersect(&homs[t].1)?;
        if image != kernel {
            failures.push(format!("Hom(P,{})", terms[t].0));
        }
    }
    let label = model.category().label(p).to_string();
    Ok(ConnectingReport {
        delta: "classical, transported",
        terms: terms
            .iter()
            .zip(&homs)
            .map(|((name, _), (amb, sub))| SequenceTerm {
                label: format!("Hom({label},{name})"),
                invariants: Subquotient::new(sub.clone(), SubgroupBasis::zero(amb))
                    .expect("0 lies in every subgroup")
                    .invariants(),
            })
            .collect(),
        joints_checked: joints,
        failures,
    })
}

/// For a morphism of short exact sequences `(α, β, γ)`, checks that the
/// connecting squares `δ' ∘ H(γ) = H(α) ∘ δ` commute in every degree.
pub fn delta_naturality_check(
    model: &ModuleModel,
    top: &ShortExactSequence,
    bottom: &ShortExactSequence,
    maps: [&ChainMap; 3],
) -> Result<bool> {
    let cat = model.category();
    let [alpha, beta, gamma] = maps;
    if top.f.target() != beta.source() || bottom.f.target() != beta.target() {
        return Err(Error::InvalidChainMap("β must map the middle complexes".into()));
    }
    if bottom.f.compose(cat, alpha)? != beta.compose(cat, &top.f)?
        || bottom.g.compose(cat, beta)? != gamma.compose(cat, &top.g)?
    {
        return Err(Error::InvalidChainMap("the ladder does not commute".into()));
    }
    let (lo, hi) = degree_span(top);
    let (lo2, hi2) = degree_span(bottom);
    for n in lo.min(lo2)..=hi.max(hi2) + 1 {
        let d_top = connecting_map(model, top, n)?;
        let d_bot = connecting_map(model, bottom, n)?;
        let h_gamma = Subquotient::induced(
            &component_matrix(model, gamma, n),
            &homology_subquotient(model, top.g.target(), n)?,
            &homology_subquotient(model, bottom.g.target(), n)?,
        )?;
        let h_alpha = Subquotient::induced(
            &component_matrix(model, alpha, n - 1),
            &homology_subquotient(model, top.f.source(), n - 1)?,
            &homology_subquotient(model, bottom.f.source(), n - 1)?,
        )?;
        if d_bot.compose(&h_gamma)? != h_alpha.compose(&d_top)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f` as a chain map between complexes concentrated in degree `n`.
pub fn concentrated_map(model: &ModuleModel, f: &Morphism, n: i64) -> Result<ChainMap> {
    let cat = model.category();
    ChainMap::new(
        cat,
        ChainComplex::concentrated(f.source(), n),
        ChainComplex::concentrated(f.target(), n),
        [(n, f.clone())].into_iter().collect(),
    )
}
