use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{gcd, ElementVector, GroupHom, OrderVector, ResidueRing};

use super::{CategoryData, FiniteLinearCategory, HomGroup, Morphism, ObjectId};

/// Upper bound on the number of surviving paths in a quiver category.
pub const MAX_PATH_BASIS: usize = 4096;

fn assemble(
    ring: ResidueRing,
    labels: Vec<String>,
    homs: Vec<HomGroup>,
    compose_basis: impl Fn(usize, usize, usize, usize, usize) -> ElementVector,
    identities: Vec<ElementVector>,
) -> Result<FiniteLinearCategory> {
    let n = labels.len();
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (rab, rbc) = (homs[a * n + b].rank(), homs[b * n + c].rank());
                let mut table = Vec::with_capacity(rab * rbc);
                for j in 0..rbc {
                    for i in 0..rab {
                        table.push(compose_basis(a, b, c, j, i));
                    }
                }
                comp.push(table);
            }
        }
    }
    FiniteLinearCategory::new(CategoryData { ring, labels, homs, comp, identities })
}

/// A category of finite `Z/m`-modules `⊕ Z/c_k`, with the data needed to move
/// between morphisms and the underlying group homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleModel {
    category: FiniteLinearCategory,
    decompositions: Vec<Vec<u64>>,
    /// Per ordered pair, the `(target summand, source summand, gcd)` of each basis element.
    entries: Vec<Vec<(usize, usize, u64)>>,
}

/// Builds the module category on the given cyclic decompositions.
///
/// `Hom(Z/a, Z/b) ≅ Z/gcd(a,b)` with generator `1 ↦ b/gcd(a,b)`; summand pairs
/// with `gcd = 1` contribute nothing. The empty decomposition is the zero module.
pub fn build_module_category(m: u64, objects: &[(&str, Vec<u64>)]) -> Result<ModuleModel> {
    let ring = ResidueRing::new(m)?;
    for (_, dec) in objects {
        for &c in dec {
            if c < 2 {
                return Err(Error::InvalidOrder(c));
            }
            if m % c != 0 {
                return Err(Error::OrderDoesNotDivide { order: c, modulus: m });
            }
        }
    }
    let n = objects.len();
    let decompositions: Vec<Vec<u64>> = objects.iter().map(|(_, d)| d.clone()).collect();
    let mut entries = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = Vec::new();
            let mut labels = Vec::new();
            for (j, &bj) in decompositions[b].iter().enumerate() {
                for (i, &ai) in decompositions[a].iter().enumerate() {
                    let g = gcd(ai, bj);
                    if g > 1 {
                        e.push((j, i, g));
                        labels.push(format!("e{j}{i}"));
                    }
                }
            }
            let orders = OrderVector::over(ring, e.iter().map(|t| t.2).collect())?;
            homs.push(HomGroup { source: ObjectId(a), target: ObjectId(b), orders, basis_labels: labels });
            entries.push(e);
        }
    }
    let matrix = |a: usize, b: usize, idx: usize| -> Vec<Vec<u64>> {
        let (j, i, g) = entries[a * n + b][idx];
        let mut mat = vec![vec![0u64; decompositions[a].len()]; decompositions[b].len()];
        mat[j][i] = decompositions[b][j] / g;
        mat
    };
    let coords_of = |a: usize, c: usize, mat: &[Vec<u64>]| -> ElementVector {
        ElementVector::new(
            entries[a * n + c]
                .iter()
                .map(|&(k, i, g)| (mat[k][i] % decompositions[c][k]) / (decompositions[c][k] / g) % g)
                .collect(),
        )
    };
    let compose_basis = |a: usize, b: usize, c: usize, j: usize, i: usize| {
        let (nm, mm) = (matrix(b, c, j), matrix(a, b, i));
        let prod: Vec<Vec<u64>> = (0..decompositions[c].len())
            .map(|k| {
                (0..decompositions[a].len())
                    .map(|s| (0..decompositions[b].len()).map(|t| nm[k][t] * mm[t][s] % decompositions[c][k]).sum::<u64>())
                    .collect()
            })
            .collect();
        coords_of(a, c, &prod)
    };
    let identities = (0..n)
        .map(|a| {
            let d = &decompositions[a];
            let id: Vec<Vec<u64>> =
                (0..d.len()).map(|k| (0..d.len()).map(|s| u64::from(k == s)).collect()).collect();
            coords_of(a, a, &id)
        })
        .collect();
    let labels = objects.iter().map(|(l, _)| l.to_string()).collect();
    let category = assemble(ring, labels, homs, compose_basis, identities)?;
    Ok(ModuleModel { category, decompositions, entries })
}

impl ModuleModel {
    pub fn category(&self) -> &FiniteLinearCategory {
        &self.category
    }

    pub fn into_category(self) -> FiniteLinearCategory {
        self.category
    }

    pub fn decomposition(&self, a: ObjectId) -> &[u64] {
        &self.decompositions[a.0]
    }

    /// The underlying abelian group of the object.
    pub fn group(&self, a: ObjectId) -> OrderVector {
        OrderVector::new(self.decompositions[a.0].clone()).expect("orders validated")
    }

    pub fn find_object(&self, decomposition: &[u64]) -> Option<ObjectId> {
        self.decompositions.iter().position(|d| d == decomposition).map(ObjectId)
    }

    /// The group homomorphism represented by `f`.
    pub fn matrix(&self, f: &Morphism) -> GroupHom {
        let (a, b) = (f.source().0, f.target().0);
        let n = self.category.object_count();
        let tgt = self.group(f.target());
        let mut cols = vec![tgt.zero(); self.decompositions[a].len()];
        for (idx, &(j, i, g)) in self.entries[a * n + b].iter().enumerate() {
            let c = f.coords().coords()[idx];
            if c != 0 {
                let bj = self.decompositions[b][j];
                cols[i].0[j] = (cols[i].0[j] + c * (bj / g)) % bj;
            }
        }
        GroupHom::new(self.group(f.source()), tgt, cols).expect("module morphisms are well defined")
    }

    /// Inverse of [`ModuleModel::matrix`].
    pub fn morphism_from_hom(&self, a: ObjectId, b: ObjectId, h: &GroupHom) -> Result<Morphism> {
        if h.source() != &self.group(a) || h.target() != &self.group(b) {
            return Err(Error::LengthMismatch {
                expected: self.decompositions[a.0].len(),
                found: h.source().rank(),
            });
        }
        let n = self.category.object_count();
        let mut coords = Vec::new();
        for &(j, i, g) in &self.entries[a.0 * n + b.0] {
            let bj = self.decompositions[b.0][j];
            coords.push(h.columns()[i].coords()[j] / (bj / g));
        }
        self.category.morphism(a, b, ElementVector::new(coords))
    }
}

/// A small ordinary category: named objects, named non-identity arrows and the
/// composition table on non-identity arrows. A table value `id_X` denotes the
/// identity of `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrdinaryCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    /// `(g, f, g∘f)`.
    pub compositions: Vec<(String, String, String)>,
}

/// The free `Z/m`-linearization: `Hom(A,B)` is free on the ordinary arrows
/// `A → B`, the identity first when `A = B`.
pub fn build_free_linearization(m: u64, cat: &OrdinaryCategory) -> Result<FiniteLinearCategory> {
    let ring = ResidueRing::new(m)?;
    let n = cat.objects.len();
    let obj = |name: &str| -> Result<usize> {
        cat.objects.iter().position(|o| o == name).ok_or_else(|| Error::UnknownObject(name.to_string()))
    };
    // arrow names, with identities as `id_X`
    let mut arrows: Vec<(String, usize, usize)> =
        cat.objects.iter().enumerate().map(|(i, o)| (format!("id_{o}"), i, i)).collect();
    for (name, s, t) in &cat.arrows {
        if arrows.iter().any(|a| &a.0 == name) {
            return Err(Error::InvalidCategory(format!("duplicate arrow `{name}`")));
        }
        arrows.push((name.clone(), obj(s)?, obj(t)?));
    }
    let index: HashMap<&str, usize> = arrows.iter().enumerate().map(|(k, a)| (a.0.as_str(), k)).collect();
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (g, f, r) in &cat.compositions {
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::TableNotClosed(format!("unknown arrow `{s}`")));
        let (gi, fi, ri) = (lookup(g)?, lookup(f)?, lookup(r)?);
        let (ga, fa, ra) = (&arrows[gi], &arrows[fi], &arrows[ri]);
        if fa.2 != ga.1 || ra.1 != fa.1 || ra.2 != ga.2 {
            return Err(Error::TableNotClosed(format!("`{g}∘{f} = {r}` has wrong endpoints")));
        }
        if table.insert((gi, fi), ri).is_some_and(|old| old != ri) {
            return Err(Error::TableNotClosed(format!("conflicting entries for `{g}∘{f}`")));
        }
    }
    let composite = |gi: usize, fi: usize| -> Result<usize> {
        if gi < n {
            return Ok(fi);
        }
        if fi < n {
            return Ok(gi);
        }
        table.get(&(gi, fi)).copied().ok_or_else(|| {
            Error::TableNotClosed(format!("missing composite `{}∘{}`", arrows[gi].0, arrows[fi].0))
        })
    };
    // basis of Hom(a,b): arrow indices a -> b in declaration order (identity first)
    let basis: Vec<Vec<usize>> = (0..n * n)
        .map(|p| {
            let (a, b) = (p / n, p % n);
            (0..arrows.len()).filter(|&k| arrows[k].1 == a && arrows[k].2 == b).collect()
        })
        .collect();
    let mut constants: BTreeMap<(usize, usize, usize, usize, usize), ElementVector> = BTreeMap::new();
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let bs = &basis[a * n + b];
            homs.push(HomGroup {
                source: ObjectId(a),
                target: ObjectId(b),
                orders: OrderVector::over(ring, vec![m; bs.len()])?,
                basis_labels: bs.iter().map(|&k| arrows[k].0.clone()).collect(),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for (j, &gk) in basis[b * n + c].iter().enumerate() {
                    for (i, &fk) in basis[a * n + b].iter().enumerate() {
                        let r = composite(gk, fk)?;
                        let target = &basis[a * n + c];
                        let pos = target.iter().position(|&k| k == r).expect("endpoints checked");
                        let mut v = vec![0; target.len()];
                        v[pos] = 1 % m;
                        constants.insert((a, b, c, j, i), ElementVector::new(v));
                    }
                }
            }
        }
    }
    let identities = (0..n)
        .map(|a| {
            let mut v = vec![0; basis[a * n + a].len()];
            v[0] = 1 % m;
            ElementVector::new(v)
        })
        .collect();
    assemble(
        ring,
        cat.objects.clone(),
        homs,
        |a, b, c, j, i| constants[&(a, b, c, j, i)].clone(),
        identities,
    )
}

/// A finite quiver: vertices and named arrows `(name, source, target)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
}

/// Path category of a quiver over `Z/m` modulo monomial zero relations.
///
/// Paths are written in composition order (`["j", "p"]` is `j∘p`). A path is
/// zero when it contains a relation as a contiguous factor or is longer than
/// `nilpotency_cap`.
pub fn build_quiver_category(
    m: u64,
    quiver: &Quiver,
    relations: &[Vec<String>],
    nilpotency_cap: usize,
) -> Result<FiniteLinearCategory> {
    let ring = ResidueRing::new(m)?;
    let n = quiver.vertices.len();
    let vertex = |name: &str| -> Result<usize> {
        quiver.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownObject(name.to_string()))
    };
    let mut arrows = Vec::with_capacity(quiver.arrows.len());
    for (name, s, t) in &quiver.arrows {
        arrows.push((name.clone(), vertex(s)?, vertex(t)?));
    }
    let arrow = |name: &str| -> Result<usize> {
        arrows.iter().position(|a| a.0 == name).ok_or_else(|| Error::UnknownObject(name.to_string()))
    };
    let rels: Vec<Vec<usize>> = relations
        .iter()
        .map(|r| r.iter().map(|s| arrow(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let killed = |p: &[usize]| -> bool {
        p.len() > nilpotency_cap || rels.iter().any(|r| !r.is_empty() && p.windows(r.len()).any(|w| w == r.as_slice()))
    };
    // path (composition order) -> (source, target); empty paths are identities
    let mut basis: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n * n];
    for v in 0..n {
        basis[v * n + v].push(Vec::new());
    }
    let mut frontier: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for (k, a) in arrows.iter().enumerate() {
        if !killed(&[k]) {
            frontier.push((vec![k], a.1, a.2));
        }
    }
    let mut total = n;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, s, t) in frontier {
            total += 1;
            if total > MAX_PATH_BASIS {
                return Err(Error::BasisTooLarge(format!(
                    "more than {MAX_PATH_BASIS} surviving paths with cap {nilpotency_cap}"
                )));
            }
            for (k, a) in arrows.iter().enumerate() {
                if a.1 == t {
                    let mut q = vec![k];
                    q.extend_from_slice(&p);
                    if !killed(&q) {
                        next.push((q, s, a.2));
                    }
                }
            }
            basis[s * n + t].push(p);
        }
        frontier = next;
    }
    for b in &mut basis {
        b.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    }
    let name = |p: &[usize], v: usize| -> String {
        if p.is_empty() {
            format!("id_{}", quiver.vertices[v])
        } else {
            p.iter().map(|&k| arrows[k].0.as_str()).collect::<Vec<_>>().join("")
        }
    };
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let bs = &basis[a * n + b];
            homs.push(HomGroup {
                source: ObjectId(a),
                target: ObjectId(b),
                orders: OrderVector::over(ring, vec![m; bs.len()])?,
                basis_labels: bs.iter().map(|p| name(p, a)).collect(),
            });
        }
    }
    let compose_basis = |a: usize, b: usize, c: usize, j: usize, i: usize| {
        let mut q = basis[b * n + c][j].clone();
        q.extend_from_slice(&basis[a * n + b][i]);
        let target = &basis[a * n + c];
        let mut v = vec![0; target.len()];
        if !killed(&q) {
            let pos = target.iter().position(|p| *p == q).expect("surviving paths are enumerated");
            v[pos] = 1 % m;
        }
        ElementVector::new(v)
    };
    let identities = (0..n)
        .map(|a| {
            let mut v = vec![0; basis[a * n + a].len()];
            v[0] = 1 % m;
            ElementVector::new(v)
        })
        .collect();
    assemble(ring, quiver.vertices.clone(), homs, compose_basis, identities)
}
