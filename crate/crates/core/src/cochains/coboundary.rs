use super::{cochain_space_basis, nr_bracket, sign, Cochain};
use crate::algebra::{ActionTensor, BiHomAlgebra, BracketTensor, Representation};
use crate::error::{Error, Result};
use crate::qlinalg::{rank_of_vectors, vector, Rational, RationalMatrix};

/// The Chevalley–Eilenberg coboundary for one (bracket, action) pairing.
///
/// Degree 0: `δv(p) = αβ^-1(p).v`. Degree `n ≥ 1`:
///
/// ```text
/// δf(p_1..p_{n+1}) = Σ_i (-1)^{i+1} αβ^{n-1}(p_i).f(p_1..p̂_i..p_{n+1})
///                  + Σ_{i<j} (-1)^{i+j} f([α^-1β(p_i), p_j], β(p_1)..β̂(p_i)..β̂(p_j)..β(p_{n+1}))
/// ```
///
/// with 1-based `i, j`. This is the sign convention under which
/// `δf = (-1)^{n-1} [μ, f]_NR` on ordinary Lie algebras; the opposite global
/// sign gives the same kernels and images.
#[derive(Clone, Debug)]
pub struct Coboundary {
    dim_g: usize,
    dim_v: usize,
    action: ActionTensor,
    alpha: RationalMatrix,
    beta: RationalMatrix,
    alpha_v: RationalMatrix,
    beta_v: RationalMatrix,
    alpha_beta_inv: RationalMatrix,
    /// `[α^-1β e_i, e_j]` for all basis pairs.
    twisted_brackets: Vec<Vec<Rational>>,
}

impl Coboundary {
    pub fn new(a: &BiHomAlgebra, v: &Representation, which: usize, action_index: usize) -> Result<Self> {
        Self::from_parts(
            a.bracket(which)?,
            v.action(action_index)?,
            a.alpha(),
            a.beta(),
            v.alpha_v(),
            v.beta_v(),
        )
    }

    pub fn from_parts(
        bracket: &BracketTensor,
        action: &ActionTensor,
        alpha: &RationalMatrix,
        beta: &RationalMatrix,
        alpha_v: &RationalMatrix,
        beta_v: &RationalMatrix,
    ) -> Result<Self> {
        let dim_g = bracket.dim();
        let dim_v = action.dim_v();
        if action.dim_g() != dim_g || alpha_v.rows() != dim_v || alpha.rows() != dim_g {
            return Err(Error::ShapeMismatch(format!(
                "bracket on dimension {dim_g} with an action of {} on dimension {dim_v}",
                action.dim_g()
            )));
        }
        let alpha_inv = alpha.inverse().ok_or(Error::NotInvertible("alpha"))?;
        let beta_inv = beta.inverse().ok_or(Error::NotInvertible("beta"))?;
        let alpha_inv_beta = &alpha_inv * beta;
        let left: Vec<_> = (0..dim_g).map(|i| alpha_inv_beta.column(i)).collect();
        let twisted_brackets = (0..dim_g * dim_g)
            .map(|ij| bracket.apply(&left[ij / dim_g], &vector::unit(dim_g, ij % dim_g)))
            .collect();
        Ok(Self {
            dim_g,
            dim_v,
            action: action.clone(),
            alpha: alpha.clone(),
            beta: beta.clone(),
            alpha_v: alpha_v.clone(),
            beta_v: beta_v.clone(),
            alpha_beta_inv: alpha * &beta_inv,
            twisted_brackets,
        })
    }

    pub fn apply(&self, f: &Cochain) -> Result<Cochain> {
        if f.dim_in() != self.dim_g || f.dim_out() != self.dim_v {
            return Err(Error::ShapeMismatch(format!(
                "cochain maps dimension {} to {}, expected {} to {}",
                f.dim_in(),
                f.dim_out(),
                self.dim_g,
                self.dim_v
            )));
        }
        if !f.intertwines(&self.alpha, &self.beta, &self.alpha_v, &self.beta_v) {
            return Err(Error::NotInCochainSpace(format!("degree {}", f.degree())));
        }
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &Cochain) -> Cochain {
        let (dg, dv) = (self.dim_g, self.dim_v);
        let n = f.degree();
        if n == 0 {
            let v = f.value_at_rank(0);
            return Cochain::from_fn(1, dg, dv, |t| self.action.act(&self.alpha_beta_inv.column(t[0]), v));
        }
        let lead = &self.alpha * &self.beta.pow(n as u32 - 1);
        let lead: Vec<_> = (0..dg).map(|i| lead.column(i)).collect();
        let beta: Vec<_> = (0..dg).map(|i| self.beta.column(i)).collect();
        Cochain::from_fn(n + 1, dg, dv, |t| {
            let mut out = vector::zeros(dv);
            for i in 0..=n {
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
                let value = f.eval_basis(&rest);
                if vector::is_zero(&value) {
                    continue;
                }
                let term = self.action.act(&lead[t[i]], &value);
                vector::add_scaled(&mut out, &sign(i), &term);
            }
            for i in 0..=n {
                for j in i + 1..=n {
                    let br = &self.twisted_brackets[t[i] * dg + t[j]];
                    if vector::is_zero(br) {
                        continue;
                    }
                    let mut args: Vec<&[Rational]> = Vec::with_capacity(n);
                    args.push(br);
                    args.extend((0..=n).filter(|&k| k != i && k != j).map(|k| beta[t[k]].as_slice()));
                    vector::add_scaled(&mut out, &sign(i + j), &f.eval(&args));
                }
            }
            out
        })
    }
}

pub fn ce_coboundary(
    a: &BiHomAlgebra,
    v: &Representation,
    f: &Cochain,
    which: usize,
    action_index: usize,
) -> Result<Cochain> {
    Coboundary::new(a, v, which, action_index)?.apply(f)
}

/// Compares `δf` for the adjoint representation with `(-1)^{n-1} [μ, f]_NR`.
pub fn coboundary_vs_nr(a: &BiHomAlgebra, which: usize, f: &Cochain) -> Result<bool> {
    let adjoint = Representation::adjoint(a);
    let delta = ce_coboundary(a, &adjoint, f, which, which)?;
    let mu = Cochain::from_bracket(a.bracket(which)?)?;
    let nr = nr_bracket(&mu, f, a)?;
    let expected = nr.scale(&sign(f.degree() + 1));
    Ok(delta == expected)
}

/// `dim H^n`, computed as `dim C^n - rank δ^n - rank δ^{n-1}`.
///
/// Fails with [`Error::NotAComplex`] if `δ∘δ` is nonzero on `C^{n-1}`.
pub fn cohomology_dim(
    a: &BiHomAlgebra,
    v: &Representation,
    n: usize,
    which: usize,
    action_index: usize,
) -> Result<usize> {
    if !v.is_regular() {
        return Err(Error::NotInvertible("representation twists"));
    }
    let delta = Coboundary::new(a, v, which, action_index)?;
    let space = cochain_space_basis(a, v, n);
    let images: Vec<Cochain> = space.basis().iter().map(|f| delta.apply_unchecked(f)).collect();
    let rank_n = rank_of_images(&images);
    let rank_prev = if n == 0 {
        0
    } else {
        let prev = cochain_space_basis(a, v, n - 1);
        let prev_images: Vec<Cochain> = prev.basis().iter().map(|f| delta.apply_unchecked(f)).collect();
        if prev_images.iter().any(|b| !delta.apply_unchecked(b).is_zero()) {
            return Err(Error::NotAComplex { degree: n - 1 });
        }
        rank_of_images(&prev_images)
    };
    Ok(space.dim() - rank_n - rank_prev)
}

pub(crate) fn rank_of_images(images: &[Cochain]) -> usize {
    match images.first() {
        None => 0,
        Some(first) => {
            let vectors: Vec<Vec<Rational>> = images.iter().map(|c| c.values().to_vec()).collect();
            rank_of_vectors(&vectors, first.values().len())
        }
    }
}
