//! The bundled example categories.

use crate::lincat::{
    build_free_linearization, build_module_category, FiniteLinearCategory, ModuleModel, OrdinaryCategory,
};

/// Finite `Z/4`-modules `Z/2, Z/4, Z/2⊕Z/4, Z/4⊕Z/4`.
pub fn module_z4() -> ModuleModel {
    build_module_category(
        4,
        &[("Z2", vec![2]), ("Z4", vec![4]), ("Z2+Z4", vec![2, 4]), ("Z4+Z4", vec![4, 4])],
    )
    .expect("bundled module category is valid")
}

/// `F_2`-vector spaces of dimension 0 to 3.
pub fn matrix_f2() -> ModuleModel {
    build_module_category(
        2,
        &[("F0", vec![]), ("F1", vec![2]), ("F2", vec![2, 2]), ("F3", vec![2, 2, 2])],
    )
    .expect("bundled matrix category is valid")
}

/// The ordinary category `x → a → b` with arrows `p: x→a`, `q: x→b`,
/// `j: a→b` and the composite `jp = j∘p` distinct from `q`.
pub fn xab_ordinary() -> OrdinaryCategory {
    let s = |x: &str| x.to_string();
    OrdinaryCategory {
        objects: vec![s("x"), s("a"), s("b")],
        arrows: vec![
            (s("p"), s("x"), s("a")),
            (s("q"), s("x"), s("b")),
            (s("j"), s("a"), s("b")),
            (s("jp"), s("x"), s("b")),
        ],
        compositions: vec![(s("j"), s("p"), s("jp"))],
    }
}

/// Free `Z/4`-linearization of [`xab_ordinary`].
pub fn free_xab() -> FiniteLinearCategory {
    build_free_linearization(4, &xab_ordinary()).expect("bundled free linearization is valid")
}
