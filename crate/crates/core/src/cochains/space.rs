use super::{binomial, increasing_tuples, Cochain};
use crate::algebra::{BiHomAlgebra, Representation};
use crate::qlinalg::{Rational, RationalMatrix};

/// A basis of `C^n_BiHom(g, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomCochainSpace {
    degree: usize,
    dim_g: usize,
    dim_v: usize,
    basis: Vec<Cochain>,
}

impl BiHomCochainSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the ambient space of all skew `n`-cochains.
    pub fn ambient_dim(&self) -> usize {
        binomial(self.dim_g, self.degree) * self.dim_v
    }
}

pub fn cochain_space_basis(a: &BiHomAlgebra, v: &Representation, n: usize) -> BiHomCochainSpace {
    twisted_cochain_basis(a.alpha(), a.beta(), v.alpha_v(), v.beta_v(), n)
}

/// Solves `t_V f(e_I) = f(t e_{i_1}, .., t e_{i_n})` for both twist pairs.
///
/// Expanding the right side over increasing tuples gives
/// `sum_J det(t[J, I]) f(e_J)`, so each constraint is a row of minors. At
/// `n = 0` the empty minor is 1 and this is the fixed-point condition.
pub fn twisted_cochain_basis(
    alpha: &RationalMatrix,
    beta: &RationalMatrix,
    alpha_v: &RationalMatrix,
    beta_v: &RationalMatrix,
    n: usize,
) -> BiHomCochainSpace {
    let dim_g = alpha.rows();
    let dim_v = alpha_v.rows();
    let tuples = increasing_tuples(dim_g, n);
    let unknowns = tuples.len() * dim_v;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(2 * unknowns);
    for (t, t_v) in [(alpha, alpha_v), (beta, beta_v)] {
        let minors: Vec<Vec<Rational>> = tuples
            .iter()
            .map(|i| tuples.iter().map(|j| t.minor(j, i)).collect())
            .collect();
        for (ri, _) in tuples.iter().enumerate() {
            for k in 0..dim_v {
                let mut row = crate::qlinalg::vector::zeros(unknowns);
                for m in 0..dim_v {
                    row[ri * dim_v + m] += t_v.get(k, m);
                }
                for (rj, minor) in minors[ri].iter().enumerate() {
                    row[rj * dim_v + k] -= minor;
                }
                rows.push(row);
            }
        }
    }
    let basis = if unknowns == 0 {
        Vec::new()
    } else {
        RationalMatrix::from_rows(rows)
            .expect("constraint rows share a length")
            .nullspace_basis()
            .into_iter()
            .map(|values| Cochain::from_values(n, dim_g, dim_v, values).expect("sized by construction"))
            .collect()
    };
    BiHomCochainSpace {
        degree: n,
        dim_g,
        dim_v,
        basis,
    }
}
