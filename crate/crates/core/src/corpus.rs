//! Small named algebras and compatible pairs used throughout the tests,
//! the acceptance suite and the CLI examples.

use crate::algebra::{semidirect_product, yau_twist, BiHomAlgebra, BracketTensor, Representation};
use crate::compatible::{nijenhuis_deform, rb_compatible_pair, CompatiblePair, RotaBaxterWeight};
use crate::qlinalg::{rat, RationalMatrix};

fn skew(dim: usize, entries: &[(usize, usize, usize, i64)]) -> BracketTensor {
    let entries: Vec<_> = entries.iter().map(|&(i, j, k, v)| (i, j, k, rat(v))).collect();
    BracketTensor::skew_from_entries(dim, &entries)
}

fn diag(values: &[i64]) -> RationalMatrix {
    RationalMatrix::diagonal(&values.iter().map(|&v| rat(v)).collect::<Vec<_>>())
}

/// The abelian algebra of dimension `dim` with identity twists.
pub fn abelian(dim: usize) -> BiHomAlgebra {
    BiHomAlgebra::untwisted(BracketTensor::zero(dim))
}

/// The non-abelian 2-dimensional Lie algebra, `[e1, e2] = e2`.
pub fn g2() -> BiHomAlgebra {
    BiHomAlgebra::untwisted(skew(2, &[(0, 1, 1, 1)]))
}

/// The Heisenberg algebra, `[e1, e2] = e3`.
pub fn heisenberg() -> BiHomAlgebra {
    BiHomAlgebra::untwisted(skew(3, &[(0, 1, 2, 1)]))
}

/// `sl2` in the basis `h, e, f`.
pub fn sl2() -> BiHomAlgebra {
    BiHomAlgebra::untwisted(skew(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]))
}

/// Twist maps `(a, b)` that are bracket morphisms of [`abelian`]`(1)`,
/// [`g2`] and [`heisenberg`] respectively.
pub fn twist_maps(dim: usize) -> (RationalMatrix, RationalMatrix) {
    match dim {
        1 => (diag(&[2]), diag(&[3])),
        2 => (diag(&[1, 2]), diag(&[1, 3])),
        3 => (diag(&[1, 2, 2]), diag(&[1, 3, 3])),
        _ => panic!("no standard twist maps in dimension {dim}"),
    }
}

/// [`yau_twist`] with the standard maps of [`twist_maps`].
pub fn twisted(l: &BiHomAlgebra) -> BiHomAlgebra {
    let (a, b) = twist_maps(l.dim());
    yau_twist(l, &a, &b).expect("standard twist maps are bracket morphisms")
}

/// `g ⋉ g` for the adjoint representation.
pub fn adjoint_semidirect(a: &BiHomAlgebra) -> BiHomAlgebra {
    semidirect_product(a, &Representation::adjoint(a), 0, 0).expect("adjoint is a representation")
}

/// Regular single-bracket algebras: the base algebras, their twists and
/// adjoint semidirect products.
pub fn regular_algebras() -> Vec<(&'static str, BiHomAlgebra)> {
    let (a1, g, h) = (abelian(1), g2(), heisenberg());
    vec![
        ("abelian1", a1.clone()),
        ("abelian1_twisted", twisted(&a1)),
        ("g2", g.clone()),
        ("g2_twisted", twisted(&g)),
        ("heisenberg", h.clone()),
        ("heisenberg_twisted", twisted(&h)),
        ("g2_adjoint_semidirect", adjoint_semidirect(&g)),
        ("g2_twisted_adjoint_semidirect", adjoint_semidirect(&twisted(&g))),
        ("heisenberg_adjoint_semidirect", adjoint_semidirect(&h)),
    ]
}

/// A Nijenhuis operator on [`g2`] with a nonzero, different deformed
/// bracket: `[e1, e2]_N = e1 - e2`.
pub fn g2_nijenhuis_operator() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[-1, -1], &[-1, 0]])
}

/// A Nijenhuis operator on [`sl2`].
pub fn sl2_nijenhuis_operator() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[-1, -1, 0], &[0, -1, 0], &[0, 0, 0]])
}

/// The Rota–Baxter pair `R = 0`, `S = -λ id` of weight `λ`, inducing
/// `(λμ, -λμ)`.
pub fn scalar_rota_baxter_pair(a: &BiHomAlgebra, lambda: i64) -> CompatiblePair {
    let d = a.dim();
    rb_compatible_pair(
        a,
        &RationalMatrix::zeros(d, d),
        &RationalMatrix::scalar(d, &rat(-lambda)),
        &RotaBaxterWeight::new(0, 0, rat(lambda)),
    )
    .expect("scalar operators form a compatible Rota-Baxter pair")
}

/// Applies [`twisted`] to both brackets of a pair.
pub fn twisted_pair(p: &CompatiblePair) -> CompatiblePair {
    CompatiblePair::new(twisted(p.algebra())).expect("two brackets in, two out")
}

/// Compatible pairs with identity twists.
pub fn untwisted_pairs() -> Vec<(&'static str, CompatiblePair)> {
    let (g, h, s) = (g2(), heisenberg(), sl2());
    let deform = |a: &BiHomAlgebra, n: &RationalMatrix| nijenhuis_deform(a, n).expect("corpus operator is Nijenhuis");
    vec![
        ("g2_nijenhuis_diag", deform(&g, &diag(&[1, 0]))),
        ("g2_nijenhuis", deform(&g, &g2_nijenhuis_operator())),
        ("heisenberg_nijenhuis", deform(&h, &diag(&[1, 0, 0]))),
        ("sl2_nijenhuis", deform(&s, &sl2_nijenhuis_operator())),
        ("g2_rota_baxter", scalar_rota_baxter_pair(&g, 2)),
        ("heisenberg_rota_baxter", scalar_rota_baxter_pair(&h, 1)),
    ]
}

/// Compatible pairs with nontrivial twists.
pub fn twisted_pairs() -> Vec<(&'static str, CompatiblePair)> {
    let (g, h) = (g2(), heisenberg());
    let deform = |a: &BiHomAlgebra, n: &RationalMatrix| nijenhuis_deform(a, n).expect("corpus operator is Nijenhuis");
    vec![
        ("g2_nijenhuis_diag_twisted", twisted_pair(&deform(&g, &diag(&[1, 0])))),
        (
            "heisenberg_nijenhuis_twisted",
            twisted_pair(&deform(&h, &diag(&[1, 0, 0]))),
        ),
        ("g2_twisted_rota_baxter", scalar_rota_baxter_pair(&twisted(&g), 3)),
    ]
}

pub fn compatible_pairs() -> Vec<(&'static str, CompatiblePair)> {
    let mut all = untwisted_pairs();
    all.extend(twisted_pairs());
    all
}
