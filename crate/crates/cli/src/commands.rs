//! One function per subcommand. Each returns the report lines, the structured
//! data and an exit status; failures surface as [`CliError`].

use serde_json::{json, Value};

use ideal_homology::axioms::{definitional_failures, run_suite, SuiteConfig};
use ideal_homology::bridge::{
    classical_homology, generator_corollary_check, is_projective, representability_check, RepresentabilityReport,
};
use ideal_homology::homology::{
    hom_left_sequences, im_vs_pointwise_image, is_exact, left_homology, right_homology, ChainComplex,
};
use ideal_homology::ideals::{
    self, cokernel_exists, is_closed, kernel_exists, principal_left, principal_right, principal_two_sided, saturate,
    Ideal, Side,
};
use ideal_homology::ktheory::{bo_counterexample, complexes_category, hom_table, homotopy_category};
use ideal_homology::lincat::{validate, FiniteLinearCategory, ModuleModel, Morphism};
use ideal_homology::linalg::{Subquotient, SubgroupBasis};

use crate::doc::{build_complex, build_morphism, explicit_data, parse, BuildError, Kind, Loaded, ParseError};
use crate::report::{table, EXIT_CAP, EXIT_INVARIANT, EXIT_OK, EXIT_PARSE};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ideal_homology::Error),
}

impl From<BuildError> for CliError {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::Parse(p) => CliError::Parse(p),
            BuildError::Core(c) => CliError::Core(c),
        }
    }
}

impl CliError {
    pub fn exit_status(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Core(ideal_homology::Error::EnumerationCapExceeded { .. }) => EXIT_CAP,
            CliError::Core(_) => EXIT_INVARIANT,
        }
    }

    pub fn data(&self) -> Value {
        match self {
            CliError::Parse(p) => json!({
                "error": "parse",
                "source": p.source_name,
                "line": p.line,
                "message": p.message,
            }),
            CliError::Usage(m) => json!({ "error": "usage", "message": m }),
            CliError::Core(e) => json!({ "error": "core", "message": e.to_string() }),
        }
    }
}

pub struct Outcome {
    pub lines: Vec<String>,
    pub data: Value,
    pub exit_status: i32,
}

impl Outcome {
    fn ok(lines: Vec<String>, data: Value) -> Self {
        Self { lines, data, exit_status: EXIT_OK }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    TwoSided,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::TwoSided => Side::TwoSided,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum IdealAction {
    Saturate,
    Ker,
    Coker,
    Im,
    Coim,
    Closed,
    Principal,
    KernelExists,
}

impl IdealAction {
    pub fn uses_side(self) -> bool {
        matches!(self, IdealAction::Saturate | IdealAction::Principal | IdealAction::Closed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum HomologyVariant {
    Right,
    Left,
    Classical,
    Compare,
    HomSequence,
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn model(loaded: &Loaded) -> Result<&ModuleModel, CliError> {
    loaded
        .built
        .model
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("`{}` is not a module category", loaded.built.name)))
}

fn complex(loaded: &Loaded, name: Option<&str>) -> Result<(String, ChainComplex), CliError> {
    let doc = &loaded.doc;
    let spec = match name {
        Some(n) => doc.complex(n).ok_or_else(|| CliError::Usage(format!("no complex `{n}` in `{}`", doc.source_name)))?,
        None => match doc.complexes.as_slice() {
            [only] => only,
            _ => return Err(CliError::Usage("name the complex with --complex".into())),
        },
    };
    Ok((spec.name.clone(), build_complex(doc, &loaded.built.category, spec)?))
}

/// A generator: a morphism declared in the document, or `A -> B : c1 c2 …`.
fn generator(loaded: &Loaded, spec: &str) -> Result<Morphism, CliError> {
    let cat = &loaded.built.category;
    if let Some(m) = loaded.doc.morphism(spec.trim()) {
        return Ok(build_morphism(&loaded.doc, cat, m)?);
    }
    let bad = |why: &str| CliError::Usage(format!("generator `{spec}`: {why}"));
    let (ends, coords) = spec.split_once(':').ok_or_else(|| bad("expected a declared morphism or `A -> B : coords`"))?;
    let (a, b) = ends.split_once("->").ok_or_else(|| bad("expected `A -> B`"))?;
    let coords: Vec<i64> = coords
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("coordinates must be integers")))
        .collect::<Result<_, _>>()?;
    let obj = |x: &str| cat.object(x.trim()).map_err(|_| bad(&format!("unknown object `{}`", x.trim())));
    cat.morphism_from_ints(obj(a)?, obj(b)?, &coords).map_err(|e| bad(&e.to_string()))
}

fn subgroup_rank(s: &SubgroupBasis) -> usize {
    Subquotient::new(s.clone(), SubgroupBasis::zero(s.ambient()))
        .expect("zero is a subgroup")
        .invariants()
        .factors()
        .len()
}

fn ideal_lines(i: &Ideal<'_>) -> (Vec<String>, Value) {
    let cat = i.category();
    let anchors: Vec<&str> = i.anchors().iter().map(|&a| cat.label(a)).collect();
    let mut rows = Vec::new();
    let mut comps = Vec::new();
    for (a, b) in i.pairs() {
        let c = i.component(a, b);
        if c.is_zero() {
            continue;
        }
        rows.push(vec![cat.label(a).to_string(), cat.label(b).to_string(), c.order().to_string(), c.to_string()]);
        comps.push(json!({
            "source": cat.label(a),
            "target": cat.label(b),
            "order": c.order() as u64,
            "howell_rows": c.rows().iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
        }));
    }
    let mut lines = vec![
        format!("side: {}", i.side()),
        format!("anchors: {}", anchors.join(", ")),
        format!("size: {}", i.size()),
    ];
    if rows.is_empty() {
        lines.push("all components zero".into());
    } else {
        lines.extend(table(&["source", "target", "order", "howell rows"], &rows));
    }
    let data = json!({
        "side": i.side().to_string(),
        "anchors": anchors,
        "size": i.size() as u64,
        "components": comps,
    });
    (lines, data)
}

pub fn validate_cmd(loaded: &Loaded) -> Result<Outcome, CliError> {
    let cat = &loaded.built.category;
    let report = validate(cat.data());
    let mut lines = vec![
        format!("category: {}", loaded.built.name),
        format!("modulus: {}", cat.modulus()),
        format!("objects: {}", cat.objects().map(|a| cat.label(a)).collect::<Vec<_>>().join(", ")),
        format!("morphisms: {}", cat.morphism_count()),
        format!("basis triples checked: {}", report.triples_checked),
        format!("violations: {}", report.violations.len()),
    ];
    lines.extend(report.violations.iter().map(|v| format!("  {v}")));
    let mut rows = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let g = cat.hom_group(a, b);
            if g.rank() > 0 {
                rows.push(vec![cat.label(a).into(), cat.label(b).into(), g.orders.to_string(), g.basis_labels.join(" ")]);
            }
        }
    }
    lines.extend(table(&["source", "target", "hom", "basis"], &rows));
    let mut complexes = Vec::new();
    for spec in &loaded.doc.complexes {
        let c = build_complex(&loaded.doc, cat, spec)?;
        let valid = ideal_homology::homology::validate_complex(cat, &c)?;
        lines.push(format!("complex {}: {} ({})", spec.name, c.describe(cat), if valid.is_valid() { "valid" } else { "d∘d ≠ 0" }));
        complexes.push(json!({ "name": spec.name, "complex": c.describe(cat), "failures": valid.failures }));
        if !valid.is_valid() {
            return Ok(Outcome {
                lines,
                data: json!({ "validation": report, "complexes": complexes }),
                exit_status: EXIT_INVARIANT,
            });
        }
    }
    for m in &loaded.doc.morphisms {
        let f = build_morphism(&loaded.doc, cat, m)?;
        lines.push(format!("morphism {}: {}", m.name, cat.describe(&f)));
    }
    let exit_status = if report.is_valid() { EXIT_OK } else { EXIT_INVARIANT };
    Ok(Outcome {
        lines,
        data: json!({
            "modulus": cat.modulus(),
            "objects": cat.objects().map(|a| cat.label(a)).collect::<Vec<_>>(),
            "morphisms": cat.morphism_count() as u64,
            "validation": report,
            "complexes": complexes,
        }),
        exit_status,
    })
}

/// An explicit category that parsed but failed validation: every violation
/// is listed and the run exits as an invariant violation.
pub fn invalid_explicit(name: &str, text: &str) -> Result<Option<Outcome>, CliError> {
    let doc = parse(name, text)?;
    if doc.kind != Some(Kind::Explicit) {
        return Ok(None);
    }
    let report = validate(&explicit_data(&doc)?);
    if report.is_valid() {
        return Ok(None);
    }
    let mut lines = vec![
        format!("category: {name}"),
        format!("basis triples checked: {}", report.triples_checked),
        format!("violations: {}", report.violations.len()),
    ];
    lines.extend(report.violations.iter().map(|v| format!("  {v}")));
    Ok(Some(Outcome { lines, data: json!({ "validation": report }), exit_status: EXIT_INVARIANT }))
}

pub fn ideal_cmd(loaded: &Loaded, side: Side, gens: &[String], action: IdealAction, cap: u128) -> Result<Outcome, CliError> {
    let cat = &loaded.built.category;
    let fs = gens.iter().map(|g| generator(loaded, g)).collect::<Result<Vec<_>, _>>()?;
    let single = || match fs.as_slice() {
        [f] => Ok(f),
        _ => Err(CliError::Usage(format!("{action:?} takes exactly one --gen"))),
    };
    let mut lines: Vec<String> = fs.iter().map(|f| format!("generator: {}", cat.describe(f))).collect();
    let generators: Vec<String> = fs.iter().map(|f| cat.describe(f)).collect();
    let (result, extra) = match action {
        IdealAction::Saturate => (saturate(cat, side, &fs), Value::Null),
        IdealAction::Principal => {
            let f = single()?;
            let i = match side {
                Side::Left => principal_left(cat, f),
                Side::Right => principal_right(cat, f),
                Side::TwoSided => principal_two_sided(cat, f),
            };
            (i, Value::Null)
        }
        IdealAction::Ker => (ideals::ker(cat, single()?), Value::Null),
        IdealAction::Coker => (ideals::coker(cat, single()?), Value::Null),
        IdealAction::Im => (ideals::im(cat, single()?), Value::Null),
        IdealAction::Coim => (ideals::coim(cat, single()?), Value::Null),
        IdealAction::Closed => {
            let i = saturate(cat, side, &fs);
            let closed = is_closed(&i)?;
            lines.push(format!("closed: {}", yes(closed)));
            (i, json!({ "closed": closed }))
        }
        IdealAction::KernelExists => {
            let f = single()?;
            let k = kernel_exists(cat, f, cap)?.map(|k| cat.describe(&k));
            let c = cokernel_exists(cat, f, cap)?.map(|c| cat.describe(&c));
            lines.push(format!("kernel: {}", k.as_deref().unwrap_or("none")));
            lines.push(format!("cokernel: {}", c.as_deref().unwrap_or("none")));
            (ideals::ker(cat, f), json!({ "kernel": k, "cokernel": c }))
        }
    };
    let (ilines, idata) = ideal_lines(&result);
    lines.extend(ilines);
    Ok(Outcome::ok(lines, json!({ "generators": generators, "ideal": idata, "result": extra })))
}

fn representability_lines(r: &RepresentabilityReport, header: [&str; 2]) -> (Vec<String>, Value) {
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|d| vec![r.object.clone(), d.degree.to_string(), d.ideal.to_string(), d.classical.to_string(), yes(d.matches)])
        .collect();
    (table(&["object", "n", header[0], header[1], "match"], &rows), serde_json::to_value(r).expect("serializable"))
}

pub fn homology_cmd(loaded: &Loaded, name: Option<&str>, variant: HomologyVariant, at: Option<&str>) -> Result<Outcome, CliError> {
    let cat = &loaded.built.category;
    let (cname, c) = complex(loaded, name)?;
    let mut lines = vec![format!("complex {cname}: {}", c.describe(cat))];
    let degrees: Vec<i64> = c.degrees().rev().collect();
    let data = match variant {
        HomologyVariant::Right | HomologyVariant::Left => {
            let (mut rows, mut tables) = (Vec::new(), Vec::new());
            for &n in &degrees {
                let fam = match variant {
                    HomologyVariant::Right => right_homology(cat, &c, n)?,
                    _ => left_homology(cat, &c, n)?,
                };
                let t = fam.family.table();
                rows.extend(t.rows.iter().map(|(x, inv)| vec![n.to_string(), x.clone(), inv.to_string()]));
                tables.push(json!({ "degree": n, "family": t }));
            }
            let label = if variant == HomologyVariant::Right { "H^R_n(C)(X)" } else { "H^L_n(C)(X)" };
            lines.extend(table(&["n", "X", label], &rows));
            json!({ "variant": format!("{variant:?}").to_lowercase(), "degrees": tables })
        }
        HomologyVariant::Classical => {
            let model = model(loaded)?;
            let hs = degrees.iter().map(|&n| classical_homology(model, &c, n)).collect::<Result<Vec<_>, _>>()?;
            let rows: Vec<Vec<String>> = hs.iter().map(|h| vec![h.degree.to_string(), h.invariants.to_string()]).collect();
            lines.extend(table(&["n", "H_n(C)"], &rows));
            json!({ "variant": "classical", "degrees": hs })
        }
        HomologyVariant::Compare => {
            let model = model(loaded)?;
            let projectives: Vec<_> = cat.objects().filter(|&p| is_projective(model, p)).collect();
            lines.push(format!(
                "projective objects: {}",
                projectives.iter().map(|&p| cat.label(p)).collect::<Vec<_>>().join(", ")
            ));
            let mut all = true;
            let (mut rows, mut reports) = (Vec::new(), Vec::new());
            for p in projectives {
                let r = representability_check(model, &c, p)?;
                all &= r.all_match();
                let (l, v) = representability_lines(&r, ["H^R_n(C)(P)", "Hom(P,H_n(C))"]);
                rows.push(l);
                reports.push(v);
            }
            for (k, l) in rows.into_iter().enumerate() {
                lines.extend(if k == 0 { l } else { l.into_iter().skip(1).collect() });
            }
            let g = generator_corollary_check(model, &c)?;
            all &= g.all_match();
            lines.push(format!("generator: {}", g.object));
            let (gl, gv) = representability_lines(&g, ["H^R_n(C)(U)", "H_n(C)"]);
            lines.extend(gl);
            lines.push(format!("all match: {}", yes(all)));
            json!({ "variant": "compare", "representability": reports, "generator": gv, "all_match": all })
        }
        HomologyVariant::HomSequence => hom_sequence(cat, &c, at, &mut lines)?,
    };
    Ok(Outcome::ok(lines, data))
}

/// `0 → A →f B (→g C) → 0` read off a complex of two or three terms,
/// compared with its `Hom(X, ·)` and `Hom(·, X)` sequences.
fn hom_sequence(cat: &FiniteLinearCategory, c: &ChainComplex, at: Option<&str>, lines: &mut Vec<String>) -> Result<Value, CliError> {
    let hi = c.hi();
    let (f, g) = match c.objects().len() {
        2 => (c.differential(hi).expect("two terms"), None),
        3 => (c.differential(hi).expect("three terms"), c.differential(hi - 1)),
        n => return Err(CliError::Usage(format!("hom-sequence needs a complex of 2 or 3 terms, got {n}"))),
    };
    let exact = is_exact(cat, c)?;
    lines.push(format!("ideal-exact: {}", yes(exact)));
    if !exact {
        return Ok(json!({ "variant": "hom-sequence", "ideal_exact": false }));
    }
    let xs: Vec<_> = match at {
        Some(x) => vec![cat.object(x).map_err(|_| CliError::Usage(format!("unknown object `{x}`")))?],
        None => cat.objects().collect(),
    };
    let (mut rows, mut out) = (Vec::new(), Vec::new());
    for x in xs {
        let r = hom_left_sequences(cat, f, g, x)?;
        let (ideal, pointwise) = im_vs_pointwise_image(cat, f, x);
        let (ri, rp) = (subgroup_rank(&ideal), subgroup_rank(&pointwise));
        let covariant_exact = r.covariant_injective && r.covariant_middle_exact && r.covariant_right_exact;
        rows.push(vec![
            cat.label(x).to_string(),
            yes(r.covariant_injective),
            yes(r.covariant_middle_exact),
            yes(r.covariant_right_exact),
            yes(r.contravariant_injective),
            yes(r.contravariant_middle_exact),
            ri.to_string(),
            rp.to_string(),
            yes(ideal == pointwise),
        ]);
        out.push(json!({
            "object": cat.label(x),
            "sequence": r,
            "covariant_exact": covariant_exact,
            "im_ideal": { "rank": ri, "order": ideal.order() as u64, "howell": ideal.to_string() },
            "im_pointwise": { "rank": rp, "order": pointwise.order() as u64, "howell": pointwise.to_string() },
        }));
    }
    lines.extend(table(
        &["X", "Hom(X,f) inj", "mid", "right", "Hom(f,X) inj", "mid", "rank Im(f)(X)", "rank im Hom(X,f)", "equal"],
        &rows,
    ));
    Ok(json!({ "variant": "hom-sequence", "ideal_exact": true, "objects": out }))
}

pub fn axioms_cmd(loaded: &Loaded, seed: u64, cap: u128) -> Result<Outcome, CliError> {
    let cat = &loaded.built.category;
    let config = SuiteConfig { seed, cap, ..SuiteConfig::default() };
    let report = run_suite(cat, &config)?;
    let mut lines = vec![
        format!("objects: {}", report.objects.join(", ")),
        format!("morphisms: {}", report.morphisms),
        format!(
            "seed {}, fuzz ideals {}, fuzz complexes {}, cap {}",
            config.seed, config.fuzz_ideals, config.fuzz_complexes, config.cap
        ),
    ];
    let rows: Vec<Vec<String>> = report
        .axioms
        .iter()
        .chain(&report.batteries)
        .map(|r| vec![r.status.to_string(), r.checked.to_string(), r.witnesses.len().to_string(), r.axiom.clone()])
        .collect();
    lines.extend(table(&["status", "checked", "witnesses", "check"], &rows));
    for r in report.axioms.iter().chain(&report.batteries) {
        for w in &r.witnesses {
            lines.push(format!("witness [{}] {}: {}", r.axiom.split(':').next().unwrap_or(""), w.subject, w.detail));
        }
        for n in &r.notes {
            lines.push(format!("note [{}] {n}", r.axiom.split(':').next().unwrap_or("")));
        }
    }
    let fatal = definitional_failures(&report);
    lines.push(format!("definitional failures: {}", fatal.len()));
    let exit_status = if fatal.is_empty() { EXIT_OK } else { EXIT_INVARIANT };
    Ok(Outcome { lines, data: serde_json::to_value(&report).expect("serializable"), exit_status })
}

pub fn khomotopy_cmd(loaded: &Loaded, u: Option<&str>, cap: u128) -> Result<Outcome, CliError> {
    let cat = &loaded.built.category;
    let complexes = loaded
        .doc
        .complexes
        .iter()
        .map(|s| Ok((s.name.clone(), build_complex(&loaded.doc, cat, s)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut lines = Vec::new();
    let hom_rows = |homs: &[ideal_homology::ktheory::HomRow]| -> Vec<Vec<String>> {
        homs.iter()
            .map(|h| vec![h.source.clone(), h.target.clone(), h.chain_maps.to_string(), h.homotopy_classes.to_string()])
            .collect()
    };
    let Some(uname) = u else {
        if complexes.is_empty() {
            return Err(CliError::Usage("no complexes declared".into()));
        }
        let cc = complexes_category(cat, &complexes)?;
        let k = homotopy_category(&cc)?;
        let homs = hom_table(&cc, &k);
        for (name, c) in &complexes {
            lines.push(format!("complex {name}: {}", c.describe(cat)));
        }
        lines.extend(table(&["source", "target", "chain maps", "homotopy classes"], &hom_rows(&homs)));
        return Ok(Outcome::ok(lines, json!({ "homs": homs })));
    };
    let model = model(loaded)?;
    let spec = loaded
        .doc
        .morphism(uname)
        .ok_or_else(|| CliError::Usage(format!("no morphism `{uname}` in `{}`", loaded.doc.source_name)))?;
    let uf = build_morphism(&loaded.doc, cat, spec)?;
    let r = bo_counterexample(model, &uf, &complexes, cap)?;
    let opt = |o: &Option<String>| o.clone().unwrap_or_else(|| "none".into());
    lines.push(format!("u: {}", cat.describe(&uf)));
    lines.push(format!("declared: {}", r.declared.join(", ")));
    lines.extend(table(&["source", "target", "chain maps", "homotopy classes"], &hom_rows(&r.homs)));
    lines.push(format!("q∘u null-homotopic: {}", yes(r.q_u_null_homotopic)));
    for (n, s) in &r.witness {
        lines.push(format!("  s_{n}: {s}"));
    }
    lines.push(format!("witness verified: {}", yes(r.witness_verified)));
    lines.push(format!("Coker([u]) in K: {}", r.coker_ideal));
    lines.push(format!("Coker([u]) size: {} (nonzero: {})", r.coker_ideal_size, yes(r.coker_ideal_nonzero)));
    lines.push(format!("[q] in Coker([u]): {}", yes(r.q_in_coker_ideal)));
    lines.push(format!("K: free principal generator: {}", opt(&r.k_free_principal_generator)));
    lines.push(format!("K: universal cokernel: {}", opt(&r.k_universal_cokernel)));
    lines.push(format!("base: free principal generator: {}", opt(&r.base_free_principal_generator)));
    lines.push(format!("base: universal cokernel: {}", opt(&r.base_universal_cokernel)));
    lines.push(format!("confirms counterexample: {}", yes(r.confirms_counterexample())));
    let mut data = serde_json::to_value(&r).expect("serializable");
    data["confirms_counterexample"] = json!(r.confirms_counterexample());
    Ok(Outcome::ok(lines, data))
}
