use super::tensor::ActionTensor;
use super::{check_twists_commute, columns, Axiom, AxiomReport, BiHomAlgebra, BracketTensor};
use crate::error::{Error, Result};
use crate::qlinalg::{vector, RationalMatrix};

/// A module `(V, action, alpha_V, beta_V)` over a BiHom-Lie algebra. Like
/// [`BiHomAlgebra`] it may carry several actions (one per bracket of a
/// compatible structure).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim_v: usize,
    actions: Vec<ActionTensor>,
    alpha_v: RationalMatrix,
    beta_v: RationalMatrix,
    regular_v: bool,
}

impl Representation {
    pub fn new(alpha_v: RationalMatrix, beta_v: RationalMatrix, actions: Vec<ActionTensor>) -> Result<Self> {
        let dim_v = alpha_v.rows();
        if !alpha_v.is_square() || beta_v.rows() != dim_v || beta_v.cols() != dim_v {
            return Err(Error::ShapeMismatch(format!(
                "representation twists must both be {dim_v}x{dim_v}"
            )));
        }
        if actions.is_empty() {
            return Err(Error::Precondition("a representation needs at least one action".into()));
        }
        let dim_g = actions[0].dim_g();
        if let Some(a) = actions.iter().find(|a| a.dim_v() != dim_v || a.dim_g() != dim_g) {
            return Err(Error::ShapeMismatch(format!(
                "action of shape {}x{} does not fit V of dimension {dim_v}",
                a.dim_g(),
                a.dim_v()
            )));
        }
        let regular_v = alpha_v.is_invertible() && beta_v.is_invertible();
        Ok(Self {
            dim_v,
            actions,
            alpha_v,
            beta_v,
            regular_v,
        })
    }

    /// The algebra acting on itself, one action per bracket.
    pub fn adjoint(a: &BiHomAlgebra) -> Self {
        let actions = a.brackets().iter().map(ActionTensor::adjoint).collect();
        Self::new(a.alpha().clone(), a.beta().clone(), actions).expect("adjoint shapes agree")
    }

    /// Zero action of a `dim_g`-dimensional algebra, repeated `count` times.
    pub fn trivial(dim_g: usize, alpha_v: RationalMatrix, beta_v: RationalMatrix, count: usize) -> Result<Self> {
        let dim_v = alpha_v.rows();
        Self::new(alpha_v, beta_v, vec![ActionTensor::zero(dim_g, dim_v); count.max(1)])
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_g(&self) -> usize {
        self.actions[0].dim_g()
    }

    pub fn actions(&self) -> &[ActionTensor] {
        &self.actions
    }

    pub fn action(&self, which: usize) -> Result<&ActionTensor> {
        self.actions.get(which).ok_or(Error::IndexOutOfRange {
            what: "action",
            index: which,
            len: self.actions.len(),
        })
    }

    pub fn alpha_v(&self) -> &RationalMatrix {
        &self.alpha_v
    }

    pub fn beta_v(&self) -> &RationalMatrix {
        &self.beta_v
    }

    pub fn is_regular(&self) -> bool {
        self.regular_v
    }

    pub fn with_actions(&self, actions: Vec<ActionTensor>) -> Result<Self> {
        Self::new(self.alpha_v.clone(), self.beta_v.clone(), actions)
    }

    pub fn single(&self, which: usize) -> Result<Self> {
        let a = self.action(which)?.clone();
        self.with_actions(vec![a])
    }
}

/// The three representation identities for one (bracket, action) pairing:
/// `alpha(p).alpha_V(v) = alpha_V(p.v)`, the `beta` analogue, and
/// `[beta p, q].beta_V(v) = alpha beta(p).(q.v) - beta(q).(alpha(p).v)`.
pub fn check_representation(
    a: &BiHomAlgebra,
    v: &Representation,
    which: usize,
    action_index: usize,
) -> Result<AxiomReport> {
    let bracket = a.bracket(which)?;
    let action = v.action(action_index)?;
    if action.dim_g() != a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "action expects a {}-dimensional algebra, got {}",
            action.dim_g(),
            a.dim()
        )));
    }
    let subject = format!("bracket {which} / action {action_index}");
    let (dg, dv) = (a.dim(), v.dim_v());
    let mut report = AxiomReport::new();
    check_twists_commute(&mut report, &subject, v.alpha_v(), v.beta_v());

    let alpha_e = columns(a.alpha());
    let beta_e = columns(a.beta());
    let alpha_beta_e = columns(&(a.alpha() * a.beta()));
    let alpha_v_e = columns(v.alpha_v());
    let beta_v_e = columns(v.beta_v());

    report.mark_checked(Axiom::ActionAlpha);
    report.mark_checked(Axiom::ActionBeta);
    for i in 0..dg {
        for b in 0..dv {
            let lhs = action.act(&alpha_e[i], &alpha_v_e[b]);
            let rhs = v.alpha_v().mul_vec(action.basis_action(i, b));
            report.expect_equal(Axiom::ActionAlpha, &subject, &[i, b], lhs, rhs);
            let lhs = action.act(&beta_e[i], &beta_v_e[b]);
            let rhs = v.beta_v().mul_vec(action.basis_action(i, b));
            report.expect_equal(Axiom::ActionBeta, &subject, &[i, b], lhs, rhs);
        }
    }

    report.mark_checked(Axiom::ActionBracket);
    for i in 0..dg {
        let alpha_p_acts: Vec<_> = (0..dv).map(|b| action.act(&alpha_e[i], &vector::unit(dv, b))).collect();
        for j in 0..dg {
            let beta_p_q = bracket.apply(&beta_e[i], &vector::unit(dg, j));
            for b in 0..dv {
                let lhs = action.act(&beta_p_q, &beta_v_e[b]);
                let mut rhs = action.act(&alpha_beta_e[i], action.basis_action(j, b));
                let second = action.act(&beta_e[j], &alpha_p_acts[b]);
                rhs = vector::sub(&rhs, &second);
                report.expect_equal(Axiom::ActionBracket, &subject, &[i, j, b], lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// Bracket of the semidirect product on `g + V`:
/// `[(p,a),(q,b)] = ([p,q], p.b - (alpha^-1 beta q).(alpha_V beta_V^-1 a))`.
pub fn semidirect_bracket(
    bracket: &BracketTensor,
    action: &ActionTensor,
    alpha_inv_beta: &RationalMatrix,
    alpha_v_beta_v_inv: &RationalMatrix,
) -> BracketTensor {
    let (dg, dv) = (bracket.dim(), action.dim_v());
    let left = columns(alpha_inv_beta);
    let right = columns(alpha_v_beta_v_inv);
    BracketTensor::from_basis_brackets(dg + dv, |x, y| {
        let mut out = vector::zeros(dg + dv);
        match (x < dg, y < dg) {
            (true, true) => out[..dg].clone_from_slice(bracket.basis_bracket(x, y)),
            // (p, 0) with (0, b): p.b
            (true, false) => out[dg..].clone_from_slice(action.basis_action(x, y - dg)),
            // (0, a) with (q, 0): -(alpha^-1 beta q).(alpha_V beta_V^-1 a)
            (false, true) => {
                let image = action.act(&left[y], &right[x - dg]);
                out[dg..].clone_from_slice(&vector::neg(&image));
            }
            (false, false) => {}
        }
        out
    })
}

/// `g ⋉ V` with twists `alpha + alpha_V`, `beta + beta_V`.
pub fn semidirect_product(
    a: &BiHomAlgebra,
    v: &Representation,
    which: usize,
    action_index: usize,
) -> Result<BiHomAlgebra> {
    let (alpha_inv_beta, alpha_v_beta_v_inv) = semidirect_maps(a, v)?;
    let report = check_representation(a, v, which, action_index)?;
    if let Some(bad) = report.violations().first() {
        return Err(Error::Precondition(format!(
            "not a representation: {} fails at {:?}",
            bad.axiom.name(),
            bad.indices
        )));
    }
    let bracket = semidirect_bracket(
        a.bracket(which)?,
        v.action(action_index)?,
        &alpha_inv_beta,
        &alpha_v_beta_v_inv,
    );
    BiHomAlgebra::new(
        a.alpha().block_diag(v.alpha_v()),
        a.beta().block_diag(v.beta_v()),
        vec![bracket],
    )
}

/// `(alpha^-1 beta, alpha_V beta_V^-1)`, failing on non-regular twists.
pub(crate) fn semidirect_maps(a: &BiHomAlgebra, v: &Representation) -> Result<(RationalMatrix, RationalMatrix)> {
    let alpha_inv = a.alpha_inverse()?;
    a.beta_inverse()?;
    v.alpha_v().inverse().ok_or(Error::NotInvertible("alpha_V"))?;
    let beta_v_inv = v.beta_v().inverse().ok_or(Error::NotInvertible("beta_V"))?;
    Ok((&alpha_inv * a.beta(), v.alpha_v() * &beta_v_inv))
}
