//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line (written
//! past the test harness capture, so it shows in plain `cargo test` output).
//!
//! Criterion 2 is known to fail: its intersection leg does not hold under the
//! one-sided ideal definitions, and the FAIL line carries the witness. The
//! test asserts that the failing set is exactly [`EXPECTED_FAILURES`], so any
//! other failure, or criterion 2 starting to pass, breaks the build.

use std::collections::HashSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;

use ideal_homology::axioms::{check_closedness, check_exact_rows, ideal_sample, run_suite, SuiteConfig};
use ideal_homology::bridge::{is_projective, representability_check};
use ideal_homology::examples::{free_xab, matrix_f2, module_z4};
use ideal_homology::fuzz;
use ideal_homology::homology::{
    complex_conditions, homotopy_boundary, induced_map, validate_complex, verify_homotopy, ChainComplex,
};
use ideal_homology::ideals::{
    coim, coker, common_morphisms, im, ker, principal_left, principal_right, principal_two_sided, product, Ideal,
    DEFAULT_ENUM_CAP,
};
use ideal_homology::ktheory::bo_counterexample;
use ideal_homology::lincat::{FiniteLinearCategory, Morphism};
use ideal_homology::linalg::{quotient_invariants, ElementVector, OrderVector, SubgroupBasis};
use ideal_homology::oracle::cross_check;

const CAP: u128 = DEFAULT_ENUM_CAP;
const SEED: u64 = ideal_homology::axioms::DEFAULT_SEED;
const EXPECTED_FAILURES: [u32; 1] = [2];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn categories() -> Vec<(&'static str, FiniteLinearCategory)> {
    vec![("module-z4", module_z4().into_category()), ("matrix-f2", matrix_f2().into_category()), ("free-xab", free_xab())]
}

fn all_morphisms(cat: &FiniteLinearCategory) -> Vec<Morphism> {
    cat.objects()
        .flat_map(|a| cat.objects().map(move |b| (a, b)))
        .flat_map(|(a, b)| cat.all_morphisms(a, b, CAP).expect("within cap"))
        .collect()
}

fn idealhom(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_idealhom")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Representability of homology by projectives.
fn c1() -> Verdict {
    let (mut complexes, mut comparisons) = (0, 0);
    for model in [matrix_f2(), module_z4()] {
        let cat = model.category();
        let projectives: Vec<_> = cat.objects().filter(|&p| is_projective(&model, p)).collect();
        let mut rng = fuzz::rng(SEED);
        for k in 0..200 {
            let c = fuzz::random_complex(&mut rng, cat, 4);
            if !validate_complex(cat, &c).unwrap().is_valid() {
                return verdict(false, format!("complex {k} is not a complex"));
            }
            for &p in &projectives {
                let r = representability_check(&model, &c, p).unwrap();
                if let Some(row) = r.rows.iter().find(|row| !row.matches) {
                    return verdict(
                        false,
                        format!("{} at {}, degree {}: {} vs {}", c.describe(cat), r.object, row.degree, row.ideal, row.classical),
                    );
                }
                comparisons += r.rows.len();
            }
            complexes += 1;
        }
    }
    verdict(true, format!("{complexes} complexes, {comparisons} degree comparisons, all equal"))
}

/// `<g|f> = <g| ∩ |f> = <g|·|f>` on composable basis pairs.
fn c2() -> Verdict {
    let mut summary = Vec::new();
    let mut witness = None;
    let mut pass = true;
    for (name, cat) in categories() {
        let (mut pairs, mut product_bad, mut inter_bad) = (0, 0, 0);
        for f in cat.all_basis_morphisms() {
            for g in cat.all_basis_morphisms().into_iter().filter(|g| g.source() == f.target()) {
                pairs += 1;
                let gf = cat.compose(&g, &f).unwrap();
                let two = principal_two_sided(&cat, &gf);
                let (left, right) = (principal_left(&cat, &g), principal_right(&cat, &f));
                if product(&left, &right).unwrap() != two {
                    product_bad += 1;
                }
                let common = common_morphisms(&left, &right).unwrap();
                let extra = two.pairs().zip(&common).find_map(|((x, y), c)| {
                    c.rows()
                        .iter()
                        .find(|r| !two.component(x, y).contains(r).unwrap())
                        .map(|r| cat.morphism(x, y, (*r).clone()).unwrap())
                });
                if let Some(h) = extra {
                    inter_bad += 1;
                    witness.get_or_insert_with(|| {
                        format!(
                            "{name}: g = {}, f = {}, g∘f = {}, yet {} lies in <g| ∩ |f>",
                            cat.describe(&g),
                            cat.describe(&f),
                            cat.describe(&gf),
                            cat.describe(&h)
                        )
                    });
                }
            }
        }
        pass &= product_bad == 0 && inter_bad == 0;
        summary.push(format!("{name}: product leg {}/{pairs}, intersection leg {}/{pairs}", pairs - product_bad, pairs - inter_bad));
    }
    let mut detail = summary.join("; ");
    if let Some(w) = witness {
        detail.push_str(&format!("; witness {w}"));
    }
    verdict(pass, detail)
}

/// The three complex conditions agree on every composable pair.
fn c3() -> Verdict {
    let mut checked = 0u64;
    for (name, cat) in categories() {
        let ms = all_morphisms(&cat);
        // the ideals of each morphism in either role, computed once
        let as_f: Vec<(Ideal<'_>, Ideal<'_>)> = ms.iter().map(|f| (im(&cat, f), coker(&cat, f))).collect();
        let as_g: Vec<(Ideal<'_>, Ideal<'_>)> = ms.iter().map(|g| (ker(&cat, g), coim(&cat, g))).collect();
        for (i, f) in ms.iter().enumerate() {
            for (j, g) in ms.iter().enumerate().filter(|(_, g)| g.source() == f.target()) {
                let zero = cat.compose(g, f).unwrap().is_zero();
                let im_in_ker = as_f[i].0.is_subideal_of(&as_g[j].0);
                let coim_in_coker = as_g[j].1.is_subideal_of(&as_f[i].1);
                if zero != im_in_ker || zero != coim_in_coker {
                    return verdict(
                        false,
                        format!("{name}: g = {}, f = {}: {zero} {im_in_ker} {coim_in_coker}", cat.describe(g), cat.describe(f)),
                    );
                }
                checked += 1;
            }
        }
        // the cached route agrees with the library's own three-way check
        for f in cat.all_basis_morphisms() {
            for g in cat.all_basis_morphisms().into_iter().filter(|g| g.source() == f.target()) {
                let conds = complex_conditions(&cat, &g, &f).unwrap();
                if conds != [conds[0]; 3] {
                    return verdict(false, format!("{name}: complex_conditions {conds:?}"));
                }
            }
        }
    }
    verdict(true, format!("{checked} composable pairs across three categories, all three conditions agree"))
}

/// Closedness and exact rows on the seeded fuzz corpus.
fn c4() -> Verdict {
    let mut parts = Vec::new();
    for (name, cat) in categories() {
        let config = SuiteConfig::default();
        let sample = ideal_sample(&cat, &config);
        let closed = check_closedness(&cat, &sample).unwrap();
        let rows = check_exact_rows(&cat, &sample, CAP).unwrap();
        if !closed.holds() || !rows.holds() || config.fuzz_ideals < 500 {
            return verdict(false, format!("{name}: closedness {}, exact rows {}", closed.status, rows.status));
        }
        parts.push(format!("{name}: {} ideals", sample.len()));
    }
    verdict(true, format!("zero failures; {}", parts.join(", ")))
}

/// The left-exactness failure in the free x, a, b category.
fn c5() -> Verdict {
    let args = ["homology", "free-xab", "--variant", "hom-sequence"];
    let (code, human) = idealhom(&args);
    let (mcode, machine) = idealhom(&[&args[..], &["--format", "machine"]].concat());
    if code != 0 || mcode != 0 {
        return verdict(false, format!("exit statuses {code}, {mcode}"));
    }
    if human != golden("homology-free-xab-hom-sequence.txt") || machine != golden("homology-free-xab-hom-sequence.json") {
        return verdict(false, "report differs from the committed golden");
    }
    let v: serde_json::Value = serde_json::from_str(&machine).unwrap();
    let x = v["data"]["objects"].as_array().unwrap().iter().find(|o| o["object"] == "x").unwrap();
    let ok = v["data"]["ideal_exact"] == true
        && x["covariant_exact"] == false
        && x["im_ideal"]["rank"] == 2
        && x["im_pointwise"]["rank"] == 1;
    verdict(
        ok,
        format!(
            "0→a→b→0 ideal-exact, Hom(x,·) not exact, rank Im(j)(x) = {} vs rank im Hom(x,j) = {}; golden matches",
            x["im_ideal"]["rank"], x["im_pointwise"]["rank"]
        ),
    )
}

/// The cokernel counterexample in the homotopy category and its m = 2 contrast.
fn c6() -> Verdict {
    let run = |model: &ideal_homology::lincat::ModuleModel, from: &str, to: &str, coords: &[i64]| {
        let cat = model.category();
        let (x, y) = (cat.object(from).unwrap(), cat.object(to).unwrap());
        let u = cat.morphism_from_ints(x, y, coords).unwrap();
        let auditors = [
            (format!("{from}[1]"), ChainComplex::concentrated(x, 1)),
            (format!("{to}[1]"), ChainComplex::concentrated(y, 1)),
        ];
        bo_counterexample(model, &u, &auditors, CAP).unwrap()
    };
    let z4 = run(&module_z4(), "Z2", "Z4", &[1]);
    let f2 = run(&matrix_f2(), "F1", "F2", &[1, 0]);
    let pass = z4.confirms_counterexample()
        && !z4.witness.is_empty()
        && f2.k_free_principal_generator.is_some()
        && f2.k_universal_cokernel.is_some();
    verdict(
        pass,
        format!(
            "m=4: q∘u null-homotopic via {}, Coker([u]) nonzero ({} morphisms), K cokernel {}; m=2: K cokernel {}",
            z4.witness.iter().map(|(n, s)| format!("s_{n} = {s}")).collect::<Vec<_>>().join(", "),
            z4.coker_ideal_size,
            z4.k_universal_cokernel.as_deref().unwrap_or("none"),
            f2.k_universal_cokernel.as_deref().unwrap_or("none"),
        ),
    )
}

/// Homotopic chain maps induce equal maps on homology.
fn c7() -> Verdict {
    let mut pairs = 0;
    for (name, cat) in categories() {
        let mut rng = fuzz::rng(SEED);
        for _ in 0..40 {
            let c = fuzz::random_complex(&mut rng, &cat, 3);
            let d = fuzz::random_complex(&mut rng, &cat, 3);
            let f = fuzz::random_chain_map(&mut rng, &cat, &c, &d).unwrap();
            let s = fuzz::random_homotopy(&mut rng, &cat, &c, &d);
            let g = f.add(&cat, &homotopy_boundary(&cat, &c, &d, &s).unwrap()).unwrap();
            if !verify_homotopy(&cat, &g, &f, &s).unwrap() {
                return verdict(false, format!("{name}: constructed homotopy does not verify"));
            }
            for n in c.degrees().filter(|&n| d.contains_degree(n)) {
                if induced_map(&cat, &f, n).unwrap() != induced_map(&cat, &g, n).unwrap() {
                    return verdict(false, format!("{name}: degree {n} of {} → {}", c.describe(&cat), d.describe(&cat)));
                }
            }
            pairs += 1;
        }
    }
    verdict(true, format!("{pairs} homotopic pairs, induced maps equal in every degree"))
}

/// Library ideal operations against naive element enumeration.
fn c8() -> Verdict {
    let mut parts = Vec::new();
    for (name, cat) in categories() {
        if cat.morphism_count() > 2000 {
            continue;
        }
        let mut rng = fuzz::rng(SEED);
        let morphisms = if name == "free-xab" {
            all_morphisms(&cat)
        } else {
            let mut v = cat.all_basis_morphisms();
            v.extend((0..40).map(|_| fuzz::random_any_morphism(&mut rng, &cat)));
            v
        };
        let ideals: Vec<Ideal<'_>> = (0..16).map(|_| fuzz::random_ideal(&mut rng, &cat)).collect();
        let bad = cross_check(&cat, &morphisms, &ideals, CAP).unwrap();
        if let Some(b) = bad.first() {
            return verdict(false, format!("{name}: {b} ({} mismatches)", bad.len()));
        }
        parts.push(format!("{name}: {} morphisms, {} ideals", morphisms.len(), ideals.len()));
    }
    verdict(true, format!("all operations agree; {}", parts.join(", ")))
}

fn random_ambient<R: Rng>(rng: &mut R) -> OrderVector {
    const ORDERS: [u64; 8] = [2, 3, 4, 5, 6, 8, 12, 16];
    loop {
        let rank = rng.gen_range(1..=4);
        let orders: Vec<u64> = (0..rank).map(|_| ORDERS[rng.gen_range(0..ORDERS.len())]).collect();
        if orders.iter().product::<u64>() <= 4096 {
            return OrderVector::new(orders).unwrap();
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Mixed-radix index of an element of `⊕ Z/d_i`.
fn index(orders: &[u64], x: &[u64]) -> usize {
    x.iter().zip(orders).fold(0, |acc, (&xi, &d)| acc * d as usize + xi as usize)
}

/// `|{x : k·x ∈ H}| / |H|` for every `k` up to the exponent, by enumeration.
fn torsion_counts(a: &OrderVector, members: &[bool], sub_order: usize) -> Vec<u128> {
    let orders = a.orders();
    let mut out = Vec::new();
    for k in 1..=a.exponent() {
        let mut x = vec![0u64; orders.len()];
        let mut hits = 0usize;
        for _ in 0..members.len() {
            let kx: Vec<u64> = x.iter().zip(orders).map(|(&xi, &d)| xi * k % d).collect();
            if members[index(orders, &kx)] {
                hits += 1;
            }
            for (xi, &d) in x.iter_mut().zip(orders).rev() {
                *xi += 1;
                if *xi < d {
                    break;
                }
                *xi = 0;
            }
        }
        out.push((hits / sub_order) as u128);
    }
    out
}

/// Howell canonicity and quotient invariants on random subgroups.
fn c9() -> Verdict {
    let mut rng = fuzz::rng(SEED);
    let instances = 10_000;
    for t in 0..instances {
        let a = random_ambient(&mut rng);
        let gens: Vec<ElementVector> = (0..rng.gen_range(0..=4)).map(|_| fuzz::random_vector(&mut rng, &a)).collect();
        let s = SubgroupBasis::howell_form(&gens, &a).unwrap();
        let mut shuffled = gens.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        if let (Some(x), Some(y)) = (gens.first(), gens.last()) {
            shuffled.push(a.add(x, &a.scale(rng.gen_range(0..16), y)));
        }
        if SubgroupBasis::howell_form(&shuffled, &a).unwrap() != s {
            return verdict(false, format!("instance {t}: generator order changes the Howell form"));
        }
        if SubgroupBasis::howell_form(s.rows(), &a).unwrap() != s {
            return verdict(false, format!("instance {t}: Howell form is not idempotent"));
        }
        let elements = s.elements();
        let mut members = vec![false; a.group_order() as usize];
        for e in &elements {
            members[index(a.orders(), e.coords())] = true;
        }
        let distinct: HashSet<&ElementVector> = elements.iter().collect();
        let inv = quotient_invariants(&a, &s).unwrap();
        let expected: Vec<u128> = (1..=a.exponent())
            .map(|k| inv.factors().iter().map(|&f| gcd(k, f) as u128).product())
            .collect();
        if torsion_counts(&a, &members, distinct.len()) != expected {
            return verdict(false, format!("instance {t}: {a} / {s} has invariants {inv} but coset counts differ"));
        }
    }
    verdict(true, format!("{instances} instances: order-independent, idempotent, coset counts match"))
}

/// Axiom-suite expectations and byte-stable goldens.
fn c10() -> Verdict {
    let mut parts = Vec::new();
    for (name, cat) in categories() {
        let r = run_suite(&cat, &SuiteConfig::default()).unwrap();
        let n = r.get("'N:").unwrap();
        let n_ok = if name == "free-xab" { n.fails() && n.witnesses.iter().any(|w| w.subject == "j") } else { n.holds() };
        let rest_ok = ["'K", "kernels, cokernels", "exact rows"]
            .iter()
            .all(|p| r.get(p).is_some_and(|a| a.holds() && a.witnesses.is_empty()));
        if !n_ok || !rest_ok {
            return verdict(false, format!("{name}: 'N {} with {} witnesses", n.status, n.witnesses.len()));
        }
        let (code, out) = idealhom(&["axioms", name]);
        if code != 0 || out != golden(&format!("axioms-{name}.txt")) {
            return verdict(false, format!("{name}: axiom report differs from its golden"));
        }
        parts.push(format!("{name}: 'N {}", n.status));
    }
    verdict(true, format!("{}; 'K, closedness, exact rows hold everywhere; goldens match", parts.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, u64, fn() -> Verdict); 10] = [
        (1, "representability by projectives", 60, c1),
        (2, "<g|f> = <g| ∩ |f> = <g|·|f>", 5, c2),
        (3, "three-way complex conditions", 30, c3),
        (4, "closedness and exact rows", 60, c4),
        (5, "left-exactness failure in free x,a,b", 1, c5),
        (6, "cokernel counterexample in K", 120, c6),
        (7, "homotopy invariance", 30, c7),
        (8, "oracle equivalence", 120, c8),
        (9, "Howell canonicity and quotient invariants", 30, c9),
        (10, "axiom-suite expectations", 60, c10),
    ];
    let mut failed = Vec::new();
    for (n, title, budget, check) in criteria {
        let start = Instant::now();
        let v = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = v.pass && in_time;
        if !pass {
            failed.push(n);
        }
        let timing = format!("{:.2}s of {budget}s{}", elapsed.as_secs_f64(), if in_time { "" } else { ", over budget" });
        let line = format!("{} {n:>2} {title} [{timing}]: {}\n", if pass { "PASS" } else { "FAIL" }, v.detail);
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    }
    assert_eq!(failed, EXPECTED_FAILURES, "unexpected acceptance outcome");
}
