use proptest::prelude::*;

use super::*;

fn err_of(text: &str) -> ParseError {
    parse("t", text).unwrap_err()
}

#[test]
fn every_bundled_document_loads() {
    for (name, _) in BUNDLED {
        let mut texts = Vec::new();
        let loaded = load(name, &mut texts).unwrap();
        for spec in &loaded.doc.complexes {
            build_complex(&loaded.doc, &loaded.built.category, spec).unwrap();
        }
        for m in &loaded.doc.morphisms {
            build_morphism(&loaded.doc, &loaded.built.category, m).unwrap();
        }
        assert!(!texts.is_empty());
    }
}

#[test]
fn unknown_keys_are_rejected_with_their_line() {
    let e = err_of("kind = module\nmodulus = 4\n\nobjekt Z2 = 2\n");
    assert_eq!((e.line, e.message.as_str()), (4, "unknown key `objekt`"));
    let e = err_of("complex C\n  degree 0 = Z2\n  arrow p : x -> y\nend\n");
    assert_eq!(e.line, 3);
}

#[test]
fn malformed_lines() {
    assert_eq!(err_of("kind = module\nmodulus = four\n").line, 2);
    assert_eq!(err_of("kind = sheaf\nmodulus = 2\n").message, "unknown kind `sheaf`");
    assert_eq!(err_of("morphism u Z2 -> Z4 = 1\n").line, 1);
    assert!(err_of("complex C\n  degree 0 = Z2\n").message.contains("no `end`"));
    assert!(err_of("complex C\n  degree 0 = A\n  degree 0 = B\nend\n").message.contains("twice"));
    assert!(err_of("kind = module\n").message.contains("modulus"));
}

#[test]
fn references_resolve_against_the_category() {
    let doc = parse("t", "category = module-z4\ncomplex C\n  degree 0 = Z8\nend\n").unwrap();
    let mut texts = Vec::new();
    let built = load("module-z4", &mut texts).unwrap().built;
    let e = build_complex(&doc, &built.category, &doc.complexes[0]).unwrap_err();
    assert_eq!((e.line, e.message.as_str()), (2, "unknown object `Z8`"));
    let doc = parse("t", "complex C\n  degree 2 = Z2\n  degree 0 = Z2\nend\n").unwrap();
    assert!(build_complex(&doc, &built.category, &doc.complexes[0]).unwrap_err().message.contains("contiguous"));
    let doc = parse("t", "complex C\n  degree 1 = Z2\n  degree 0 = Z4\n  d 1 = 1 1\nend\n").unwrap();
    assert!(build_complex(&doc, &built.category, &doc.complexes[0]).is_err());
}

#[test]
fn missing_differentials_are_zero() {
    let mut texts = Vec::new();
    let built = load("module-z4", &mut texts).unwrap().built;
    let doc = parse("t", "complex C\n  degree 1 = Z2\n  degree 0 = Z4\nend\n").unwrap();
    let c = build_complex(&doc, &built.category, &doc.complexes[0]).unwrap();
    assert!(c.differential(1).unwrap().is_zero());
}

#[test]
fn quiver_documents_build() {
    let text = "kind = quiver\nmodulus = 3\nvertex u\nvertex v\nvertex w\narrow a : u -> v\narrow b : v -> w\nrelation b a\ncap = 2\n";
    let doc = parse("t", text).unwrap();
    let cat = build_category(&doc).unwrap().category;
    let (u, w) = (cat.object("u").unwrap(), cat.object("w").unwrap());
    assert_eq!(cat.rank(u, w), 0);
    // five Hom groups of order 3 (identities, a, b), four trivial ones
    assert_eq!(cat.morphism_count(), 5 * 3 + 4);
}

#[test]
fn explicit_tables_fill_missing_entries_with_zero() {
    let text = "kind = explicit\nmodulus = 2\nobject A\nobject B\nhom A A = 2\nhom B B = 2\ncomp A A A = 1\ncomp B B B = 1\nidentity A = 1\nidentity B = 1\n";
    let data = explicit_data(&parse("t", text).unwrap()).unwrap();
    assert_eq!(data.comp.len(), 8);
    assert!(FiniteLinearCategory::new(data).is_ok());
}

fn module_doc(m: u64, objects: &[Vec<u64>]) -> String {
    let mut s = format!("kind = module\nmodulus = {m}\n");
    for (k, o) in objects.iter().enumerate() {
        let orders: Vec<String> = o.iter().map(u64::to_string).collect();
        s.push_str(&format!("object M{k} = {}\n", orders.join(" ")));
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A rendered module document parses back to the same decompositions and
    /// builds the same category as the builder called directly.
    #[test]
    fn module_documents_round_trip(
        m in prop::sample::select(vec![2u64, 3, 4, 6, 8, 12]),
        picks in prop::collection::vec(prop::collection::vec(0usize..6, 0..3), 1..4),
    ) {
        let divisors: Vec<u64> = (2..=m).filter(|d| m % d == 0).collect();
        let objects: Vec<Vec<u64>> =
            picks.iter().map(|o| o.iter().map(|&k| divisors[k % divisors.len()]).collect()).collect();
        let doc = parse("t", &module_doc(m, &objects)).unwrap();
        let parsed: Vec<Vec<u64>> = doc.objects.iter().map(|o| o.2.clone().unwrap()).collect();
        prop_assert_eq!(&parsed, &objects);
        let built = build_category(&doc).unwrap();
        let names: Vec<String> = (0..objects.len()).map(|k| format!("M{k}")).collect();
        let direct: Vec<(&str, Vec<u64>)> = names.iter().map(String::as_str).zip(objects.iter().cloned()).collect();
        let expected = build_module_category(m, &direct).unwrap();
        prop_assert_eq!(built.category.data(), expected.category().data());
    }
}
