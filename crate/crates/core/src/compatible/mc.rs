use super::CompatiblePair;
use crate::algebra::BiHomAlgebra;
use crate::cochains::{nr_bracket, Cochain};
use crate::error::{Error, Result};
use crate::qlinalg::ratio;

/// Two degree-2 algebra-valued cochains, i.e. two degree-1 elements of the
/// shifted Nijenhuis–Richardson algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MCPair {
    theta1: Cochain,
    theta2: Cochain,
}

impl MCPair {
    pub fn new(theta1: Cochain, theta2: Cochain, a: &BiHomAlgebra) -> Result<Self> {
        for (name, theta) in [("theta1", &theta1), ("theta2", &theta2)] {
            if theta.degree() != 2 || theta.dim_in() != a.dim() || theta.dim_out() != a.dim() {
                return Err(Error::ShapeMismatch(format!(
                    "{name} must be a 2-cochain on dimension {}",
                    a.dim()
                )));
            }
            if !theta.intertwines(a.alpha(), a.beta(), a.alpha(), a.beta()) {
                return Err(Error::NotInCochainSpace(name.into()));
            }
        }
        Ok(Self { theta1, theta2 })
    }

    /// `(μ_1, μ_2)`; both brackets must be ordinarily skew.
    pub fn from_pair(p: &CompatiblePair) -> Result<Self> {
        Self::new(
            Cochain::from_bracket(p.first())?,
            Cochain::from_bracket(p.second())?,
            p.algebra(),
        )
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            theta1: Cochain::zero(2, dim, dim),
            theta2: Cochain::zero(2, dim, dim),
        }
    }

    pub fn theta1(&self) -> &Cochain {
        &self.theta1
    }

    pub fn theta2(&self) -> &Cochain {
        &self.theta2
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            theta1: self.theta1.add(&other.theta1),
            theta2: self.theta2.add(&other.theta2),
        }
    }
}

/// The differentials used with [`MCPair`]: zero, or `[θ, -]_NR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Differential {
    Zero,
    Adjoint(Cochain),
}

impl Differential {
    fn apply(&self, x: &Cochain, a: &BiHomAlgebra) -> Result<Cochain> {
        match self {
            Differential::Zero => Ok(Cochain::zero(x.degree() + 1, x.dim_in(), x.dim_out())),
            Differential::Adjoint(theta) => nr_bracket(theta, x, a),
        }
    }
}

/// `d_1θ_1 + ½[θ_1, θ_1] = 0`, `d_2θ_2 + ½[θ_2, θ_2] = 0` and
/// `d_1θ_2 + d_2θ_1 + [θ_1, θ_2] = 0`.
pub fn mc_pair_check(m: &MCPair, d1: &Differential, d2: &Differential, a: &BiHomAlgebra) -> Result<bool> {
    let half = ratio(1, 2);
    let first = d1
        .apply(&m.theta1, a)?
        .add(&nr_bracket(&m.theta1, &m.theta1, a)?.scale(&half));
    if !first.is_zero() {
        return Ok(false);
    }
    let second = d2
        .apply(&m.theta2, a)?
        .add(&nr_bracket(&m.theta2, &m.theta2, a)?.scale(&half));
    if !second.is_zero() {
        return Ok(false);
    }
    let mixed = d1
        .apply(&m.theta2, a)?
        .add(&d2.apply(&m.theta1, a)?)
        .add(&nr_bracket(&m.theta1, &m.theta2, a)?);
    Ok(mixed.is_zero())
}

/// Both sides of the twisting equivalence for a base pair and an increment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistedMcOutcome {
    /// `base + increment` is a Maurer–Cartan pair for zero differentials.
    pub direct: bool,
    /// `increment` is a Maurer–Cartan pair for `d_i = [θ_i, -]`.
    pub twisted: bool,
}

impl TwistedMcOutcome {
    pub fn agree(&self) -> bool {
        self.direct == self.twisted
    }
}

pub fn twisted_mc_check(base: &MCPair, increment: &MCPair, a: &BiHomAlgebra) -> Result<TwistedMcOutcome> {
    if !mc_pair_check(base, &Differential::Zero, &Differential::Zero, a)? {
        return Err(Error::Precondition("base is not a Maurer-Cartan pair".into()));
    }
    let direct = mc_pair_check(&base.add(increment), &Differential::Zero, &Differential::Zero, a)?;
    let twisted = mc_pair_check(
        increment,
        &Differential::Adjoint(base.theta1.clone()),
        &Differential::Adjoint(base.theta2.clone()),
        a,
    )?;
    Ok(TwistedMcOutcome { direct, twisted })
}
