//! Both sides of the relations among the torus and cross-cap generators.

use super::morphism::{id, mobius, torus, Morphism};

fn compose3(a: &Morphism, b: &Morphism, c: &Morphism) -> Morphism {
    a.compose(b).and_then(|x| x.compose(c)).expect("arities agree")
}

/// The Yang-Baxter equation for the torus generators on strands `l, m, n`:
///
/// `(id_n ⊗ T_{l,m}) ∘ (T_{l,n} ⊗ id_m) ∘ (id_l ⊗ T_{m,n})`
/// against
/// `(T_{m,n} ⊗ id_l) ∘ (id_m ⊗ T_{l,n}) ∘ (T_{l,m} ⊗ id_n)`.
pub fn yang_baxter(l: usize, m: usize, n: usize) -> (Morphism, Morphism) {
    let lhs = compose3(&id(n).tensor(&torus(l, m)), &torus(l, n).tensor(&id(m)), &id(l).tensor(&torus(m, n)));
    let rhs = compose3(&torus(m, n).tensor(&id(l)), &id(m).tensor(&torus(l, n)), &torus(l, m).tensor(&id(n)));
    (lhs, rhs)
}

/// Three cross-caps against one cross-cap over a torus:
///
/// `(id_m ⊗ M_l) ∘ M_{l+m} ∘ (id_l ⊗ M_m)` against
/// `(id_{m+l} ⊗ M_0) ∘ T_{l,m}`.
///
/// The cross-cap on the right acts on no strands, so it is tensored onto
/// the whole codomain of the torus generator.
pub fn crosscap_torus(l: usize, m: usize) -> (Morphism, Morphism) {
    let lhs = compose3(&id(m).tensor(&mobius(l)), &mobius(l + m), &id(l).tensor(&mobius(m)));
    let rhs = id(m + l).tensor(&mobius(0)).compose(&torus(l, m)).expect("arities agree");
    (lhs, rhs)
}
