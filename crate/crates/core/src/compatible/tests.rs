use super::*;
use crate::algebra::{check_representation, ActionTensor, Representation};
use crate::cochains::{ce_coboundary, cochain_space_basis, mc_check, nr_bracket, Cochain};
use crate::corpus;
use crate::qlinalg::{rat, vector, RationalMatrix};

fn diag(values: &[i64]) -> RationalMatrix {
    RationalMatrix::diagonal(&values.iter().map(|&v| rat(v)).collect::<Vec<_>>())
}

fn pair_of(a: &BiHomAlgebra, second: BracketTensor) -> CompatiblePair {
    CompatiblePair::new(a.with_brackets(vec![a.bracket(0).unwrap().clone(), second]).unwrap()).unwrap()
}

#[test]
fn zero_or_equal_second_bracket_is_compatible() {
    for a in [corpus::g2(), corpus::heisenberg(), corpus::twisted(&corpus::g2())] {
        assert!(pair_of(&a, BracketTensor::zero(a.dim())).is_compatible());
        assert!(pair_of(&a, a.bracket(0).unwrap().clone()).is_compatible());
    }
}

#[test]
fn individual_failures_come_first() {
    let a = corpus::g2();
    let mut symmetric = BracketTensor::zero(2);
    symmetric.set(0, 1, 0, rat(1));
    symmetric.set(1, 0, 0, rat(1));
    let p = pair_of(&a, symmetric);
    let report = check_compatible_pair(&p);
    assert_eq!(report.violations()[0].axiom, Axiom::SkewSymmetry);
}

#[test]
fn g2_diagonal_nijenhuis() {
    let a = corpus::g2();
    let n = diag(&[1, 0]);
    assert!(nijenhuis_check(&a, &n).unwrap());
    let deformed = nijenhuis_bracket(a.bracket(0).unwrap(), &n);
    assert_eq!(deformed.basis_bracket(0, 1), &[rat(0), rat(1)]);
    assert!(nijenhuis_deform(&a, &n).unwrap().is_compatible());
}

#[test]
fn trivial_nijenhuis_operators() {
    let a = corpus::heisenberg();
    let id = RationalMatrix::identity(3);
    assert!(nijenhuis_check(&a, &id).unwrap());
    assert_eq!(&nijenhuis_bracket(a.bracket(0).unwrap(), &id), a.bracket(0).unwrap());
    let zero = RationalMatrix::zeros(3, 3);
    assert!(nijenhuis_check(&a, &zero).unwrap());
    assert!(nijenhuis_bracket(a.bracket(0).unwrap(), &zero).is_zero());
}

#[test]
fn nontrivial_g2_nijenhuis_operator() {
    let a = corpus::g2();
    let n = corpus::g2_nijenhuis_operator();
    let deformed = nijenhuis_bracket(a.bracket(0).unwrap(), &n);
    assert_eq!(deformed.basis_bracket(0, 1), &[rat(1), rat(-1)]);
    assert!(nijenhuis_deform(&a, &n).unwrap().is_compatible());
}

#[test]
fn non_commuting_operator_is_rejected() {
    let a = corpus::twisted(&corpus::g2());
    let n = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
    assert!(matches!(nijenhuis_check(&a, &n), Err(Error::Precondition(_))));
}

#[test]
fn lambda_sums() {
    let p = nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap();
    assert_eq!(
        lambda_sum_bracket(&p, &rat(1), &rat(0)).brackets(),
        &[p.first().clone()]
    );
    assert!(lambda_sum_bracket(&p, &rat(0), &rat(0)).bracket(0).unwrap().is_zero());
    let sum = lambda_sum_bracket(&p, &rat(2), &rat(3));
    assert!(check_bihom_lie(&sum, 0).unwrap().passed());
}

#[test]
fn scalar_rota_baxter_operators() {
    let a = corpus::g2();
    let w = RotaBaxterWeight::new(0, 0, rat(5));
    let zero = RationalMatrix::zeros(2, 2);
    assert!(rb_check(&a, &zero, &w).unwrap());
    assert_eq!(
        rb_induced_bracket(&a, &zero, &w).unwrap(),
        a.bracket(0).unwrap().scale(&rat(5))
    );
    let minus = RationalMatrix::scalar(2, &rat(-5));
    assert!(rb_check(&a, &minus, &w).unwrap());
    assert!(rb_compatible_check(&a, &zero, &minus, &w).unwrap());
    assert!(rb_compatible_pair(&a, &zero, &minus, &w).unwrap().is_compatible());
}

#[test]
fn g2_projection_is_not_rota_baxter() {
    // R = diag(0, 1), weight 0: [Re1, Re2] = 0 but R([Re1, e2] + [e1, Re2]) = e2.
    let a = corpus::g2();
    let r = diag(&[0, 1]);
    assert!(!rb_check(&a, &r, &RotaBaxterWeight::new(0, 0, rat(0))).unwrap());
}

#[test]
fn rota_baxter_with_itself_or_zero() {
    // R = diag(1, 0) on g2 at weight 0: [Rp, Rq] = 0 and R([Rp, q] + [p, Rq]) = R(e2) = 0.
    let a = corpus::g2();
    let r = diag(&[1, 0]);
    let w = RotaBaxterWeight::new(0, 0, rat(0));
    assert!(rb_check(&a, &r, &w).unwrap());
    assert!(rb_compatible_check(&a, &r, &r, &w).unwrap());
    assert!(rb_compatible_check(&a, &r, &RationalMatrix::zeros(2, 2), &w).unwrap());
    let induced = rb_induced_bracket(&a, &r, &w).unwrap();
    assert!(check_bihom_lie(&a.with_brackets(vec![induced]).unwrap(), 0)
        .unwrap()
        .passed());
}

#[test]
fn mc_pairs_with_zero_differentials() {
    let a = corpus::g2();
    let z = Differential::Zero;
    assert!(mc_pair_check(&MCPair::zero(2), &z, &z, &a).unwrap());
    let mu = Cochain::from_bracket(a.bracket(0).unwrap()).unwrap();
    let m = MCPair::new(mu, Cochain::zero(2, 2, 2), &a).unwrap();
    assert!(mc_pair_check(&m, &z, &z, &a).unwrap());
    let p = nijenhuis_deform(&a, &corpus::g2_nijenhuis_operator()).unwrap();
    assert!(mc_pair_check(&MCPair::from_pair(&p).unwrap(), &z, &z, &a).unwrap());
}

#[test]
fn twisting_by_a_base_pair() {
    let a = corpus::g2();
    let p = nijenhuis_deform(&a, &corpus::g2_nijenhuis_operator()).unwrap();
    let base = MCPair::from_pair(&p).unwrap();
    let zero = MCPair::zero(2);
    let out = twisted_mc_check(&base, &zero, &a).unwrap();
    assert!(out.direct && out.twisted);

    let mu = Cochain::from_bracket(p.first()).unwrap();
    let mu2 = Cochain::from_bracket(p.second()).unwrap();
    let base = MCPair::new(mu.clone(), Cochain::zero(2, 2, 2), &a).unwrap();
    let inc = MCPair::new(Cochain::zero(2, 2, 2), mu2.clone(), &a).unwrap();
    let out = twisted_mc_check(&base, &inc, &a).unwrap();
    assert!(out.direct && out.twisted);

    let base = MCPair::new(mu.clone(), mu2.clone(), &a).unwrap();
    let inc = MCPair::new(mu.neg(), mu2.neg(), &a).unwrap();
    let out = twisted_mc_check(&base, &inc, &a).unwrap();
    assert!(out.direct && out.twisted);
}

#[test]
fn compatible_adjoint_representation() {
    for (name, p) in corpus::compatible_pairs() {
        let v = Representation::adjoint(p.algebra());
        let report = check_compatible_representation(&p, &v).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.violations().first());
    }
}

#[test]
fn zero_actions_are_compatible() {
    let p = nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap();
    let v = Representation::trivial(2, RationalMatrix::identity(3), RationalMatrix::identity(3), 2).unwrap();
    assert!(check_compatible_representation(&p, &v).unwrap().passed());
}

#[test]
fn second_structure_zero_reduces_to_first() {
    let a = corpus::heisenberg();
    let p = pair_of(&a, BracketTensor::zero(3));
    let adj = Representation::adjoint(&a);
    let v = Representation::adjoint(p.algebra())
        .with_actions(vec![adj.actions()[0].clone(), ActionTensor::zero(3, 3)])
        .unwrap();
    assert!(check_compatible_representation(&p, &v).unwrap().passed());
}

#[test]
fn lambda_sum_representation_is_a_representation() {
    let p = nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap();
    let v = Representation::adjoint(p.algebra());
    let (a, w) = lambda_sum_representation(&p, &v, &rat(2), &rat(-1)).unwrap();
    assert!(check_representation(&a, &w, 0, 0).unwrap().passed());
    let (a1, w1) = lambda_sum_representation(&p, &v, &rat(1), &rat(0)).unwrap();
    assert_eq!(a1.brackets(), &[p.first().clone()]);
    assert_eq!(w1.actions(), &[v.actions()[0].clone()]);
}

#[test]
fn semidirect_of_compatible_pairs() {
    let p = nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap();
    let s = compatible_semidirect(&p, &Representation::adjoint(p.algebra())).unwrap();
    assert_eq!(s.dim(), 4);
    assert!(s.is_compatible());

    let line = pair_of(&corpus::abelian(1), BracketTensor::zero(1));
    let v = Representation::trivial(1, RationalMatrix::identity(1), RationalMatrix::identity(1), 2).unwrap();
    let s = compatible_semidirect(&line, &v).unwrap();
    assert_eq!(s.dim(), 2);
    assert!(s.first().is_zero() && s.second().is_zero());
}

#[test]
fn lift_reads_only_algebra_components() {
    let f = Cochain::from_linear_map(&RationalMatrix::identity(2));
    let lifted = lift_cochain(&f);
    assert_eq!(lifted.dim_in(), 4);
    assert_eq!(lifted.eval_basis(&[0]), vec![rat(0), rat(0), rat(1), rat(0)]);
    assert!(vector::is_zero(&lifted.eval_basis(&[2])));
    assert!(lift_cochain(&Cochain::zero(2, 2, 3)).is_zero());
}

#[test]
fn lifted_coboundary_is_an_nr_bracket() {
    for p in [
        nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap(),
        corpus::scalar_rota_baxter_pair(&corpus::heisenberg(), 1),
    ] {
        let v = Representation::adjoint(p.algebra());
        let s = compatible_semidirect(&p, &v).unwrap();
        let pi1 = Cochain::from_bracket(s.first()).unwrap();
        for n in 1..=2 {
            for f in cochain_space_basis(p.algebra(), &v, n).basis() {
                let delta = ce_coboundary(p.algebra(), &v, f, 0, 0).unwrap();
                let nr = nr_bracket(&pi1, &lift_cochain(f), s.algebra()).unwrap();
                let expected = if n % 2 == 1 { nr } else { nr.neg() };
                assert_eq!(lift_cochain(&delta), expected);
            }
        }
    }
}

#[test]
fn compatible_coboundary_examples() {
    let p = nijenhuis_deform(&corpus::g2(), &corpus::g2_nijenhuis_operator()).unwrap();
    let v = Representation::adjoint(p.algebra());
    let id = Cochain::from_linear_map(&RationalMatrix::identity(2));
    let out = compatible_coboundary(&p, &v, &CompatibleCochain::Tuple(vec![id.clone()])).unwrap();
    let expected = vec![
        ce_coboundary(p.algebra(), &v, &id, 0, 0).unwrap(),
        ce_coboundary(p.algebra(), &v, &id, 1, 1).unwrap(),
    ];
    assert_eq!(out, CompatibleCochain::Tuple(expected));
    let zero = CompatibleCochain::Tuple(vec![Cochain::zero(2, 2, 2); 2]);
    assert!(compatible_coboundary(&p, &v, &zero).unwrap().is_zero());
}

#[test]
fn degree_zero_requires_equal_actions() {
    // Heisenberg with the pair (μ, 0): e3 is central for both, e1 is fixed but
    // acted on by μ only.
    let a = corpus::heisenberg();
    let p = pair_of(&a, BracketTensor::zero(3));
    let v = Representation::adjoint(p.algebra());
    let ok = CompatibleCochain::Degree0(vec![rat(0), rat(0), rat(1)]);
    assert!(compatible_coboundary(&p, &v, &ok).unwrap().is_zero());
    let bad = CompatibleCochain::Degree0(vec![rat(1), rat(0), rat(0)]);
    assert!(matches!(
        compatible_coboundary(&p, &v, &bad),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn anticommutation_special_cases() {
    let a = corpus::g2();
    let same = pair_of(&a, a.bracket(0).unwrap().clone());
    let zero = pair_of(&a, BracketTensor::zero(2));
    for p in [same, zero] {
        let v = Representation::adjoint(p.algebra());
        for n in 0..=2 {
            assert!(anticommute_check(&p, &v, n).unwrap());
        }
    }
}

#[test]
fn abelian_line_compatible_cohomology() {
    let p = pair_of(&corpus::abelian(1), BracketTensor::zero(1));
    let v = Representation::adjoint(p.algebra());
    // Every differential vanishes; C^1_c is a single copy of C^1 and C^2 = 0.
    let dims: Vec<usize> = (0..=2).map(|n| compatible_cohomology_dim(&p, &v, n).unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 0]);
}

#[test]
fn compatible_space_has_n_copies() {
    let p = corpus::scalar_rota_baxter_pair(&corpus::heisenberg(), 1);
    let v = Representation::adjoint(p.algebra());
    let complex = CompatibleComplex::new(&p, &v).unwrap();
    for n in 1..=3 {
        assert_eq!(
            complex.basis(n).len(),
            n * cochain_space_basis(p.algebra(), &v, n).dim()
        );
    }
}

#[test]
fn phi_at_degree_zero_halves() {
    let v = CompatibleCochain::Degree0(vec![rat(2), rat(4)]);
    assert_eq!(sum_morphism_phi(&v, 2).values(), &[rat(1), rat(2)]);
}

#[test]
fn corpus_pairs_satisfy_the_complex_identities() {
    for (name, p) in corpus::compatible_pairs() {
        let v = Representation::adjoint(p.algebra());
        let complex = CompatibleComplex::new(&p, &v).unwrap();
        for n in 0..=2 {
            assert!(complex.anticommutes(n), "{name} anticommutation at {n}");
            assert!(complex.squares_to_zero(n), "{name} square at {n}");
            assert!(complex.is_chain_map_at(n), "{name} chain map at {n}");
        }
    }
}

#[test]
fn untwisted_corpus_pairs_are_mc_pairs() {
    for (name, p) in corpus::untwisted_pairs() {
        let m = MCPair::from_pair(&p).unwrap();
        let z = Differential::Zero;
        assert!(mc_pair_check(&m, &z, &z, p.algebra()).unwrap(), "{name}");
        assert!(mc_check(p.algebra(), 0).unwrap() && mc_check(p.algebra(), 1).unwrap());
    }
}
