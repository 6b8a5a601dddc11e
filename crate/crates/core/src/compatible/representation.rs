use super::CompatiblePair;
use crate::algebra::{
    check_representation, columns, semidirect_bracket, Axiom, AxiomReport, BiHomAlgebra, Representation,
};
use crate::cochains::{increasing_tuples, Cochain};
use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational};

fn require_two_actions(v: &Representation) -> Result<()> {
    if v.actions().len() != 2 {
        return Err(Error::Precondition(format!(
            "a compatible representation needs two actions, got {}",
            v.actions().len()
        )));
    }
    Ok(())
}

/// The single-action checks for both pairings, then the cross identity
///
/// ```text
/// [βp, q]_1 ._2 β_V v + [βp, q]_2 ._1 β_V v
///     = αβp ._1 (q ._2 v) - βq ._2 (αp ._1 v) + αβp ._2 (q ._1 v) - βq ._1 (αp ._2 v)
/// ```
pub fn check_compatible_representation(p: &CompatiblePair, v: &Representation) -> Result<AxiomReport> {
    require_two_actions(v)?;
    let a = p.algebra();
    let mut report = check_representation(a, v, 0, 0)?;
    report.merge(check_representation(a, v, 1, 1)?);

    let (b1, b2) = (p.first(), p.second());
    let (r1, r2) = (&v.actions()[0], &v.actions()[1]);
    let (dg, dv) = (a.dim(), v.dim_v());
    let alpha_e = columns(a.alpha());
    let beta_e = columns(a.beta());
    let alpha_beta_e = columns(&(a.alpha() * a.beta()));
    let beta_v_e = columns(v.beta_v());
    report.mark_checked(Axiom::RepresentationCompatibility);
    for i in 0..dg {
        for j in 0..dg {
            let q = vector::unit(dg, j);
            let br1 = b1.apply(&beta_e[i], &q);
            let br2 = b2.apply(&beta_e[i], &q);
            for b in 0..dv {
                let w = vector::unit(dv, b);
                let lhs = vector::add(&r2.act(&br1, &beta_v_e[b]), &r1.act(&br2, &beta_v_e[b]));
                let mut rhs = r1.act(&alpha_beta_e[i], &r2.act(&q, &w));
                rhs = vector::sub(&rhs, &r2.act(&beta_e[j], &r1.act(&alpha_e[i], &w)));
                vector::add_assign(&mut rhs, &r2.act(&alpha_beta_e[i], &r1.act(&q, &w)));
                rhs = vector::sub(&rhs, &r1.act(&beta_e[j], &r2.act(&alpha_e[i], &w)));
                report.expect_equal(Axiom::RepresentationCompatibility, "actions", &[i, j, b], lhs, rhs);
            }
        }
    }
    Ok(report)
}

fn require_passing(report: &AxiomReport, what: &str) -> Result<()> {
    match report.violations().first() {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!(
            "{what}: {} fails at {:?}",
            v.axiom.name(),
            v.indices
        ))),
    }
}

/// `(g, λμ_1 + ημ_2)` acting on `V` through `λ._1 + η._2`.
pub fn lambda_sum_representation(
    p: &CompatiblePair,
    v: &Representation,
    lambda: &Rational,
    eta: &Rational,
) -> Result<(BiHomAlgebra, Representation)> {
    require_passing(
        &check_compatible_representation(p, v)?,
        "not a compatible representation",
    )?;
    let algebra = super::lambda_sum_bracket(p, lambda, eta);
    let action = v.actions()[0].combine(lambda, &v.actions()[1], eta);
    Ok((algebra, v.with_actions(vec![action])?))
}

/// The pair of semidirect brackets on `g + V`, one per (bracket, action).
pub fn compatible_semidirect(p: &CompatiblePair, v: &Representation) -> Result<CompatiblePair> {
    let a = p.algebra();
    let alpha_inv = a.alpha_inverse()?;
    a.beta_inverse()?;
    v.alpha_v().inverse().ok_or(Error::NotInvertible("alpha_V"))?;
    let beta_v_inv = v.beta_v().inverse().ok_or(Error::NotInvertible("beta_V"))?;
    require_passing(
        &check_compatible_representation(p, v)?,
        "not a compatible representation",
    )?;
    let left = &alpha_inv * a.beta();
    let right = v.alpha_v() * &beta_v_inv;
    let brackets = (0..2)
        .map(|i| semidirect_bracket(&a.brackets()[i], &v.actions()[i], &left, &right))
        .collect();
    CompatiblePair::new(BiHomAlgebra::new(
        a.alpha().block_diag(v.alpha_v()),
        a.beta().block_diag(v.beta_v()),
        brackets,
    )?)
}

/// `f~((p_1, v_1), .., (p_n, v_n)) = (0, f(p_1, .., p_n))` on `g + V`.
pub fn lift_cochain(f: &Cochain) -> Cochain {
    let (dg, dv) = (f.dim_in(), f.dim_out());
    let d = dg + dv;
    let mut values = Vec::new();
    for tuple in increasing_tuples(d, f.degree()) {
        let mut out = vector::zeros(d);
        if tuple.iter().all(|&i| i < dg) {
            out[dg..].clone_from_slice(&f.eval_basis(&tuple));
        }
        values.extend(out);
    }
    Cochain::from_values(f.degree(), d, d, values).expect("sized by construction")
}
