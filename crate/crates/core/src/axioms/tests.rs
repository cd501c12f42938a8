use super::*;
use crate::examples::{free_xab, matrix_f2, module_z4};
use crate::lincat::build_module_category;

const CAP: u128 = DEFAULT_ENUM_CAP;

fn small() -> SuiteConfig {
    SuiteConfig { fuzz_ideals: 40, fuzz_complexes: 8, ..SuiteConfig::default() }
}

#[test]
fn k_and_mono_epi_hold() {
    let model = module_z4();
    for cat in [model.category(), &free_xab()] {
        assert!(check_k(cat, CAP).unwrap().holds());
        let me = check_mono_epi(cat, CAP).unwrap();
        assert!(me.holds(), "{:?}", me.witnesses);
    }
}

#[test]
fn n_on_abelian_and_free_models() {
    let model = module_z4();
    assert!(check_n(model.category(), CAP).unwrap().holds());
    assert!(check_n_op(model.category(), CAP).unwrap().holds());
    let f2 = matrix_f2();
    assert!(check_n(f2.category(), CAP).unwrap().holds());
    let xab = free_xab();
    let n = check_n(&xab, CAP).unwrap();
    assert!(n.fails());
    assert!(n.witnesses.iter().any(|w| w.subject == "j"));
    let nop = check_n_op(&xab, CAP).unwrap();
    assert!(nop.fails());
    assert!(nop.witnesses.iter().any(|w| w.subject == "j"));
}

#[test]
fn vacuous_without_nontrivial_monos() {
    let zero = build_module_category(2, &[("F0", vec![])]).unwrap();
    let r = check_n(zero.category(), CAP).unwrap();
    assert_eq!((r.status, r.checked), (Status::Vacuous, 0));
}

#[test]
fn closedness_and_rows_on_samples() {
    let model = module_z4();
    let cat = model.category();
    let sample = ideal_sample(cat, &small());
    assert!(check_closedness(cat, &sample).unwrap().holds());
    assert!(check_exact_rows(cat, &sample, CAP).unwrap().holds());
    let xab = free_xab();
    let sample = ideal_sample(&xab, &small());
    assert!(check_closedness(&xab, &sample).unwrap().holds());
    assert!(check_exact_rows(&xab, &sample, CAP).unwrap().holds());
}

#[test]
fn suite_is_deterministic() {
    let xab = free_xab();
    let a = run_suite(&xab, &small()).unwrap();
    let b = run_suite(&xab, &small()).unwrap();
    assert_eq!(a, b);
    assert!(ensure_definitional(&a).is_ok());
    assert!(a.get("'N:").unwrap().fails());
    assert!(a.batteries.iter().all(AxiomReport::holds));
}
