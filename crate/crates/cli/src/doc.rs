//! Line-oriented description documents.
//!
//! ```text
//! # comment
//! kind = module            # module | free | quiver | explicit
//! modulus = 4
//! object Z2 = 2            # module: cyclic orders; other kinds: bare name
//! arrow p : x -> a         # free and quiver
//! compose j p = jp         # free: (g, f, g∘f)
//! vertex v                 # quiver
//! relation b a             # quiver: zero path, composition order
//! cap = 3                  # quiver nilpotency cap
//! hom A B = 2 2            # explicit: cyclic orders of the basis
//! comp A B C = 1 0 ; 0 1   # explicit: e_j∘e_i, j-major
//! identity A = 1 0         # explicit
//! category = module-z4     # reference instead of an inline category
//! morphism u : Z2 -> Z4 = 1
//! complex C
//!   degree 1 = Z4
//!   degree 0 = Z2
//!   d 1 = 1
//! end
//! ```

use std::collections::BTreeMap;
use std::fmt;

use ideal_homology::homology::ChainComplex;
use ideal_homology::lincat::{
    build_free_linearization, build_module_category, build_quiver_category, CategoryData, FiniteLinearCategory,
    HomGroup, ModuleModel, Morphism, ObjectId, OrdinaryCategory, Quiver,
};
use ideal_homology::linalg::{ElementVector, OrderVector, ResidueRing};

/// A syntax or reference error with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{source_name}:{line}: {message}")]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Module,
    Free,
    Quiver,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSpec {
    pub name: String,
    pub line: usize,
    pub objects: BTreeMap<i64, String>,
    pub differentials: BTreeMap<i64, Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub name: String,
    pub line: usize,
    pub source: String,
    pub target: String,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub source_name: String,
    pub kind: Option<Kind>,
    pub modulus: Option<u64>,
    pub category_ref: Option<(usize, String)>,
    pub objects: Vec<(usize, String, Option<Vec<u64>>)>,
    pub arrows: Vec<(usize, String, String, String)>,
    pub compositions: Vec<(usize, String, String, String)>,
    pub vertices: Vec<(usize, String)>,
    pub relations: Vec<(usize, Vec<String>)>,
    pub cap: Option<usize>,
    pub homs: Vec<(usize, String, String, Vec<u64>)>,
    pub comps: Vec<(usize, [String; 3], Vec<Vec<u64>>)>,
    pub identities: Vec<(usize, String, Vec<u64>)>,
    pub morphisms: Vec<MorphismSpec>,
    pub complexes: Vec<ComplexSpec>,
}

impl Document {
    fn err(&self, line: usize, message: impl Into<String>) -> ParseError {
        ParseError { source_name: self.source_name.clone(), line, message: message.into() }
    }

    pub fn has_inline_category(&self) -> bool {
        self.kind.is_some()
    }

    pub fn complex(&self, name: &str) -> Option<&ComplexSpec> {
        self.complexes.iter().find(|c| c.name == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismSpec> {
        self.morphisms.iter().find(|m| m.name == name)
    }
}

fn int<T: std::str::FromStr>(s: &str) -> Option<T> {
    s.trim().parse().ok()
}

fn ints<T: std::str::FromStr>(s: &str) -> Option<Vec<T>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

/// `NAME : SRC -> TGT`.
fn signature(s: &str) -> Option<(String, String, String)> {
    let (name, rest) = s.split_once(':')?;
    let (src, tgt) = rest.split_once("->")?;
    let (name, src, tgt) = (name.trim(), src.trim(), tgt.trim());
    if name.is_empty() || src.is_empty() || tgt.is_empty() || name.contains(' ') {
        return None;
    }
    Some((name.into(), src.into(), tgt.into()))
}

pub fn parse(source_name: &str, text: &str) -> Result<Document, ParseError> {
    let mut doc = Document { source_name: source_name.into(), ..Document::default() };
    let mut open: Option<ComplexSpec> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let bad = |what: &str| doc.err(line, format!("malformed {what}: `{content}`"));
        if let Some(cx) = open.as_mut() {
            match head {
                "end" => doc.complexes.push(open.take().expect("open block")),
                "degree" => {
                    let (n, obj) = rest.split_once('=').ok_or_else(|| bad("degree line"))?;
                    let n = int(n).ok_or_else(|| bad("degree"))?;
                    if cx.objects.insert(n, obj.trim().to_string()).is_some() {
                        return Err(doc.err(line, format!("degree {n} given twice")));
                    }
                }
                "d" => {
                    let (n, v) = rest.split_once('=').ok_or_else(|| bad("differential line"))?;
                    let n = int(n).ok_or_else(|| bad("differential degree"))?;
                    let v = ints(v).ok_or_else(|| bad("coordinate vector"))?;
                    if cx.differentials.insert(n, v).is_some() {
                        return Err(doc.err(line, format!("differential d_{n} given twice")));
                    }
                }
                _ => return Err(doc.err(line, format!("unknown key `{head}` inside complex block"))),
            }
            continue;
        }
        let value = || rest.strip_prefix('=').map(str::trim);
        match head {
            "kind" => {
                let v = value().ok_or_else(|| bad("kind"))?;
                doc.kind = Some(match v {
                    "module" => Kind::Module,
                    "free" => Kind::Free,
                    "quiver" => Kind::Quiver,
                    "explicit" => Kind::Explicit,
                    _ => return Err(doc.err(line, format!("unknown kind `{v}`"))),
                });
            }
            "modulus" => doc.modulus = Some(value().and_then(int).ok_or_else(|| bad("modulus"))?),
            "cap" => doc.cap = Some(value().and_then(int).ok_or_else(|| bad("cap"))?),
            "category" => doc.category_ref = Some((line, value().ok_or_else(|| bad("category reference"))?.to_string())),
            "object" => match rest.split_once('=') {
                Some((name, orders)) => {
                    let orders = ints(orders).ok_or_else(|| bad("object decomposition"))?;
                    doc.objects.push((line, name.trim().to_string(), Some(orders)));
                }
                None if !rest.is_empty() && !rest.contains(' ') => doc.objects.push((line, rest.to_string(), None)),
                None => return Err(bad("object")),
            },
            "vertex" if !rest.is_empty() && !rest.contains(' ') => doc.vertices.push((line, rest.to_string())),
            "arrow" => {
                let (n, s, t) = signature(rest).ok_or_else(|| bad("arrow"))?;
                doc.arrows.push((line, n, s, t));
            }
            "compose" => {
                let (lhs, h) = rest.split_once('=').ok_or_else(|| bad("composition"))?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                if parts.len() != 2 || h.trim().is_empty() {
                    return Err(bad("composition"));
                }
                doc.compositions.push((line, parts[0].into(), parts[1].into(), h.trim().into()));
            }
            "relation" if !rest.is_empty() => {
                doc.relations.push((line, rest.split_whitespace().map(String::from).collect()));
            }
            "hom" => {
                let (lhs, orders) = rest.split_once('=').ok_or_else(|| bad("hom"))?;
                let ends: Vec<&str> = lhs.split_whitespace().collect();
                let orders = ints(orders).ok_or_else(|| bad("hom orders"))?;
                if ends.len() != 2 {
                    return Err(bad("hom"));
                }
                doc.homs.push((line, ends[0].into(), ends[1].into(), orders));
            }
            "comp" => {
                let (lhs, table) = rest.split_once('=').ok_or_else(|| bad("comp"))?;
                let ends: Vec<&str> = lhs.split_whitespace().collect();
                if ends.len() != 3 {
                    return Err(bad("comp"));
                }
                let entries = if table.trim().is_empty() {
                    Vec::new()
                } else {
                    table.split(';').map(ints).collect::<Option<Vec<_>>>().ok_or_else(|| bad("comp entries"))?
                };
                doc.comps.push((line, [ends[0].into(), ends[1].into(), ends[2].into()], entries));
            }
            "identity" => {
                let (name, v) = rest.split_once('=').ok_or_else(|| bad("identity"))?;
                doc.identities.push((line, name.trim().into(), ints(v).ok_or_else(|| bad("identity coordinates"))?));
            }
            "morphism" => {
                let (sig, v) = rest.split_once('=').ok_or_else(|| bad("morphism"))?;
                let (name, source, target) = signature(sig).ok_or_else(|| bad("morphism signature"))?;
                let coords = ints(v).ok_or_else(|| bad("morphism coordinates"))?;
                doc.morphisms.push(MorphismSpec { name, line, source, target, coords });
            }
            "complex" if !rest.is_empty() && !rest.contains(' ') => {
                open = Some(ComplexSpec {
                    name: rest.to_string(),
                    line,
                    objects: BTreeMap::new(),
                    differentials: BTreeMap::new(),
                });
            }
            _ => return Err(doc.err(line, format!("unknown key `{head}`"))),
        }
    }
    if let Some(cx) = open {
        return Err(doc.err(cx.line, format!("complex `{}` has no `end`", cx.name)));
    }
    if doc.kind.is_some() && doc.category_ref.is_some() {
        return Err(doc.err(doc.category_ref.as_ref().map_or(1, |c| c.0), "both an inline category and a reference"));
    }
    if doc.kind.is_some() && doc.modulus.is_none() {
        return Err(doc.err(1, "missing `modulus`"));
    }
    Ok(doc)
}

/// A built category, with its module model when the document describes one.
pub struct BuiltCategory {
    pub name: String,
    pub category: FiniteLinearCategory,
    pub model: Option<ModuleModel>,
}

impl fmt::Debug for BuiltCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BuiltCategory({})", self.name)
    }
}

/// Why a document failed to turn into a category.
#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(ideal_homology::Error),
}

fn core_at(doc: &Document, line: usize) -> impl Fn(ideal_homology::Error) -> BuildError + '_ {
    move |e| match e {
        ideal_homology::Error::InvalidCategory(_) | ideal_homology::Error::EnumerationCapExceeded { .. } => {
            BuildError::Core(e)
        }
        other => BuildError::Parse(doc.err(line, other.to_string())),
    }
}

/// Builds the inline category of a document.
pub fn build_category(doc: &Document) -> Result<BuiltCategory, BuildError> {
    let kind = doc.kind.clone().ok_or_else(|| doc.err(1, "no inline category (missing `kind`)"))?;
    let m = doc.modulus.expect("checked by the parser");
    let first = |v: &[(usize, String, Option<Vec<u64>>)]| v.first().map_or(1, |o| o.0);
    match kind {
        Kind::Module => {
            if let Some((line, ..)) = doc.objects.iter().find(|o| o.2.is_none()) {
                return Err(doc.err(*line, "module objects need `= orders`").into());
            }
            let objs: Vec<(&str, Vec<u64>)> =
                doc.objects.iter().map(|(_, n, o)| (n.as_str(), o.clone().unwrap_or_default())).collect();
            let model = build_module_category(m, &objs).map_err(core_at(doc, first(&doc.objects)))?;
            Ok(BuiltCategory { name: doc.source_name.clone(), category: model.category().clone(), model: Some(model) })
        }
        Kind::Free => {
            if let Some((line, ..)) = doc.objects.iter().find(|o| o.2.is_some()) {
                return Err(doc.err(*line, "free objects take no decomposition").into());
            }
            let ord = OrdinaryCategory {
                objects: doc.objects.iter().map(|o| o.1.clone()).collect(),
                arrows: doc.arrows.iter().map(|a| (a.1.clone(), a.2.clone(), a.3.clone())).collect(),
                compositions: doc.compositions.iter().map(|c| (c.1.clone(), c.2.clone(), c.3.clone())).collect(),
            };
            let cat = build_free_linearization(m, &ord).map_err(core_at(doc, first(&doc.objects)))?;
            Ok(BuiltCategory { name: doc.source_name.clone(), category: cat, model: None })
        }
        Kind::Quiver => {
            let quiver = Quiver {
                vertices: doc.vertices.iter().map(|v| v.1.clone()).collect(),
                arrows: doc.arrows.iter().map(|a| (a.1.clone(), a.2.clone(), a.3.clone())).collect(),
            };
            let relations: Vec<Vec<String>> = doc.relations.iter().map(|r| r.1.clone()).collect();
            let line = doc.vertices.first().map_or(1, |v| v.0);
            let cap = doc.cap.ok_or_else(|| doc.err(line, "quiver documents need `cap`"))?;
            let cat = build_quiver_category(m, &quiver, &relations, cap).map_err(core_at(doc, line))?;
            Ok(BuiltCategory { name: doc.source_name.clone(), category: cat, model: None })
        }
        Kind::Explicit => {
            let category = FiniteLinearCategory::new(explicit_data(doc)?).map_err(BuildError::Core)?;
            Ok(BuiltCategory { name: doc.source_name.clone(), category, model: None })
        }
    }
}

/// Raw structure constants of an `explicit` document, before validation.
/// Hom groups and tables that are not listed are zero.
pub fn explicit_data(doc: &Document) -> Result<CategoryData, ParseError> {
    let m = doc.modulus.ok_or_else(|| doc.err(1, "missing `modulus`"))?;
    if let Some((line, ..)) = doc.objects.iter().find(|o| o.2.is_some()) {
        return Err(doc.err(*line, "explicit objects take no decomposition"));
    }
    let labels: Vec<String> = doc.objects.iter().map(|o| o.1.clone()).collect();
    let n = labels.len();
    let idx = |line: usize, name: &str| -> Result<usize, ParseError> {
        labels.iter().position(|l| l == name).ok_or_else(|| doc.err(line, format!("unknown object `{name}`")))
    };
    let ring = ResidueRing::new(m).map_err(|e| doc.err(1, e.to_string()))?;
    let mut homs: Vec<Option<HomGroup>> = vec![None; n * n];
    for (line, a, b, orders) in &doc.homs {
        let (i, j) = (idx(*line, a)?, idx(*line, b)?);
        let orders = OrderVector::over(ring, orders.clone()).map_err(|e| doc.err(*line, e.to_string()))?;
        let basis_labels = (0..orders.rank()).map(|k| format!("{a}{b}{k}")).collect();
        homs[i * n + j] = Some(HomGroup { source: ObjectId(i), target: ObjectId(j), orders, basis_labels });
    }
    let homs: Vec<HomGroup> = homs
        .into_iter()
        .enumerate()
        .map(|(k, h)| {
            h.unwrap_or_else(|| HomGroup {
                source: ObjectId(k / n),
                target: ObjectId(k % n),
                orders: OrderVector::trivial(),
                basis_labels: Vec::new(),
            })
        })
        .collect();
    let mut comp: Vec<Option<Vec<ElementVector>>> = vec![None; n * n * n];
    for (line, [a, b, c], entries) in &doc.comps {
        let (i, j, k) = (idx(*line, a)?, idx(*line, b)?, idx(*line, c)?);
        comp[(i * n + j) * n + k] = Some(entries.iter().map(|e| ElementVector::new(e.clone())).collect());
    }
    let comp: Vec<Vec<ElementVector>> = comp
        .into_iter()
        .enumerate()
        .map(|(t, table)| {
            table.unwrap_or_else(|| {
                let (a, b, c) = (t / (n * n), (t / n) % n, t % n);
                let size = homs[a * n + b].rank() * homs[b * n + c].rank();
                vec![ElementVector::new(vec![0; homs[a * n + c].rank()]); size]
            })
        })
        .collect();
    let mut identities: Vec<Option<ElementVector>> = vec![None; n];
    for (line, a, v) in &doc.identities {
        identities[idx(*line, a)?] = Some(ElementVector::new(v.clone()));
    }
    let identities = identities
        .into_iter()
        .enumerate()
        .map(|(a, v)| v.ok_or_else(|| doc.err(doc.objects[a].0, format!("missing identity for `{}`", labels[a]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CategoryData { ring, labels, homs, comp, identities })
}

fn object(doc: &Document, cat: &FiniteLinearCategory, line: usize, name: &str) -> Result<ObjectId, ParseError> {
    cat.object(name).map_err(|_| doc.err(line, format!("unknown object `{name}`")))
}

pub fn build_morphism(doc: &Document, cat: &FiniteLinearCategory, spec: &MorphismSpec) -> Result<Morphism, ParseError> {
    let a = object(doc, cat, spec.line, &spec.source)?;
    let b = object(doc, cat, spec.line, &spec.target)?;
    cat.morphism_from_ints(a, b, &spec.coords).map_err(|e| doc.err(spec.line, e.to_string()))
}

/// Resolves a complex block. Degrees must be contiguous; each `d n` maps
/// degree `n` to degree `n−1`, and missing differentials are zero.
pub fn build_complex(doc: &Document, cat: &FiniteLinearCategory, spec: &ComplexSpec) -> Result<ChainComplex, ParseError> {
    let (&lo, _) = spec.objects.first_key_value().ok_or_else(|| doc.err(spec.line, "complex without degrees"))?;
    let (&hi, _) = spec.objects.last_key_value().expect("nonempty");
    if (hi - lo + 1) as usize != spec.objects.len() {
        return Err(doc.err(spec.line, format!("degrees of `{}` are not contiguous", spec.name)));
    }
    let objects = spec
        .objects
        .values()
        .map(|name| object(doc, cat, spec.line, name))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = spec.differentials.keys().find(|&&n| n <= lo || n > hi) {
        return Err(doc.err(spec.line, format!("d_{n} lies outside the degrees of `{}`", spec.name)));
    }
    let mut ds = Vec::new();
    for n in lo + 1..=hi {
        let (x, y) = (objects[(n - lo) as usize], objects[(n - 1 - lo) as usize]);
        let d = match spec.differentials.get(&n) {
            Some(v) => cat.morphism_from_ints(x, y, v).map_err(|e| doc.err(spec.line, format!("d_{n}: {e}")))?,
            None => cat.zero_morphism(x, y),
        };
        ds.push(d);
    }
    ChainComplex::new(lo, objects, ds).map_err(|e| doc.err(spec.line, e.to_string()))
}

pub const BUNDLED: [(&str, &str); 5] = [
    ("module-z4", include_str!("../docs/module-z4.doc")),
    ("matrix-f2", include_str!("../docs/matrix-f2.doc")),
    ("free-xab", include_str!("../docs/free-xab.doc")),
    ("ses-z4", include_str!("../docs/ses-z4.doc")),
    ("bo-z4", include_str!("../docs/bo-z4.doc")),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// A loaded document together with the category it describes or references.
#[derive(Debug)]
pub struct Loaded {
    pub doc: Document,
    pub built: BuiltCategory,
}

pub fn read(reference: &str) -> Result<(String, String), ParseError> {
    match bundled(reference) {
        Some(t) => Ok((reference.to_string(), t.to_string())),
        None => std::fs::read_to_string(reference).map(|t| (reference.to_string(), t)).map_err(|e| ParseError {
            source_name: reference.into(),
            line: 0,
            message: format!("cannot read document: {e}"),
        }),
    }
}

/// Loads a bundled name or a file, following one `category =` reference.
/// Every document read is appended to `texts`, even when loading fails.
pub fn load(reference: &str, texts: &mut Vec<(String, String)>) -> Result<Loaded, BuildError> {
    let (name, text) = read(reference)?;
    texts.push((name.clone(), text.clone()));
    let doc = parse(&name, &text)?;
    let built = match &doc.category_ref {
        Some((line, r)) => {
            let (cname, ctext) = read(r).map_err(|e| doc.err(*line, e.message))?;
            texts.push((cname.clone(), ctext.clone()));
            let cdoc = parse(&cname, &ctext)?;
            if cdoc.category_ref.is_some() {
                return Err(doc.err(*line, "referenced document must define its category inline").into());
            }
            build_category(&cdoc)?
        }
        None => build_category(&doc)?,
    };
    Ok(Loaded { doc, built })
}

#[cfg(test)]
mod tests;
