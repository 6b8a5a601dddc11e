//! Compatible BiHom-Lie structures: two brackets on one space whose every
//! linear combination is again a BiHom-Lie bracket.

mod complex;
mod mc;
mod operators;
mod representation;

pub use complex::{
    anticommute_check, chain_map_check, compatible_coboundary, compatible_cohomology_dim, sum_morphism_phi,
    CompatibleCochain, CompatibleComplex,
};
pub use mc::{mc_pair_check, twisted_mc_check, Differential, MCPair, TwistedMcOutcome};
pub use operators::{
    nijenhuis_bracket, nijenhuis_check, nijenhuis_deform, rb_check, rb_compatible_check, rb_compatible_pair,
    rb_induced_bracket, RotaBaxterWeight,
};
pub use representation::{
    check_compatible_representation, compatible_semidirect, lambda_sum_representation, lift_cochain,
};

use crate::algebra::{check_bihom_lie, columns, Axiom, AxiomReport, BiHomAlgebra, BracketTensor};
use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

/// A two-bracket algebra together with the outcome of its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    algebra: BiHomAlgebra,
    brackets_report: AxiomReport,
    compatibility_report: AxiomReport,
}

impl CompatiblePair {
    pub fn new(algebra: BiHomAlgebra) -> Result<Self> {
        if algebra.brackets().len() != 2 {
            return Err(Error::Precondition(format!(
                "a compatible pair needs exactly two brackets, got {}",
                algebra.brackets().len()
            )));
        }
        let mut brackets_report = check_bihom_lie(&algebra, 0)?;
        brackets_report.merge(check_bihom_lie(&algebra, 1)?);
        let compatibility_report = six_term_report(&algebra);
        Ok(Self {
            algebra,
            brackets_report,
            compatibility_report,
        })
    }

    pub fn from_brackets(
        alpha: RationalMatrix,
        beta: RationalMatrix,
        first: BracketTensor,
        second: BracketTensor,
    ) -> Result<Self> {
        Self::new(BiHomAlgebra::new(alpha, beta, vec![first, second])?)
    }

    pub fn algebra(&self) -> &BiHomAlgebra {
        &self.algebra
    }

    pub fn first(&self) -> &BracketTensor {
        &self.algebra.brackets()[0]
    }

    pub fn second(&self) -> &BracketTensor {
        &self.algebra.brackets()[1]
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self) -> &RationalMatrix {
        self.algebra.alpha()
    }

    pub fn beta(&self) -> &RationalMatrix {
        self.algebra.beta()
    }

    /// Individual BiHom-Lie checks of both brackets.
    pub fn brackets_report(&self) -> &AxiomReport {
        &self.brackets_report
    }

    /// The six-term identity alone.
    pub fn compatibility_report(&self) -> &AxiomReport {
        &self.compatibility_report
    }

    pub fn is_compatible(&self) -> bool {
        self.brackets_report.passed() && self.compatibility_report.passed()
    }
}

/// Both individual bracket reports followed by the six-term identity
/// `[β²p, [βq, αr]_1]_2 + [β²p, [βq, αr]_2]_1 + cyclic = 0`.
pub fn check_compatible_pair(p: &CompatiblePair) -> AxiomReport {
    let mut report = p.brackets_report.clone();
    report.merge(p.compatibility_report.clone());
    report
}

fn six_term_report(a: &BiHomAlgebra) -> AxiomReport {
    let (b1, b2) = (&a.brackets()[0], &a.brackets()[1]);
    let d = a.dim();
    let alpha_e = columns(a.alpha());
    let beta_e = columns(a.beta());
    let beta2_e = columns(&a.beta().pow(2));
    let inner1: Vec<Vec<Vec<Rational>>> = (0..d)
        .map(|q| (0..d).map(|r| b1.apply(&beta_e[q], &alpha_e[r])).collect())
        .collect();
    let inner2: Vec<Vec<Vec<Rational>>> = (0..d)
        .map(|q| (0..d).map(|r| b2.apply(&beta_e[q], &alpha_e[r])).collect())
        .collect();
    let mut report = AxiomReport::new();
    report.mark_checked(Axiom::Compatibility);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut sum = vector::zeros(d);
                for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                    vector::add_assign(&mut sum, &b2.apply(&beta2_e[p], &inner1[q][r]));
                    vector::add_assign(&mut sum, &b1.apply(&beta2_e[p], &inner2[q][r]));
                }
                report.expect_equal(Axiom::Compatibility, "pair", &[i, j, k], sum, vector::zeros(d));
            }
        }
    }
    report
}

/// The single-bracket algebra `(g, λ μ_1 + η μ_2, α, β)`.
pub fn lambda_sum_bracket(p: &CompatiblePair, lambda: &Rational, eta: &Rational) -> BiHomAlgebra {
    let bracket = p.first().combine(lambda, p.second(), eta);
    p.algebra.with_brackets(vec![bracket]).expect("shapes already agree")
}

#[cfg(test)]
mod tests;
