use num_traits::Zero;

use super::representation::check_compatible_representation;
use super::CompatiblePair;
use crate::algebra::{columns, Representation};
use crate::cochains::{cochain_space_basis, Coboundary, Cochain};
use crate::error::{Error, Result};
use crate::qlinalg::{rank_of_vectors, ratio, Rational, RationalMatrix};

/// An element of `C^n_c(g, V)`: a single fixed vector at degree 0, an
/// `n`-tuple of `n`-cochains above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompatibleCochain {
    Degree0(Vec<Rational>),
    Tuple(Vec<Cochain>),
}

impl CompatibleCochain {
    pub fn degree(&self) -> usize {
        match self {
            CompatibleCochain::Degree0(_) => 0,
            CompatibleCochain::Tuple(fs) => fs.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CompatibleCochain::Degree0(v) => v.iter().all(Zero::is_zero),
            CompatibleCochain::Tuple(fs) => fs.iter().all(Cochain::is_zero),
        }
    }

    /// All coordinates concatenated, for rank computations.
    pub fn flatten(&self) -> Vec<Rational> {
        match self {
            CompatibleCochain::Degree0(v) => v.clone(),
            CompatibleCochain::Tuple(fs) => fs.iter().flat_map(|f| f.values().iter().cloned()).collect(),
        }
    }
}

/// The compatible complex of a pair with coefficients in a two-action
/// representation.
#[derive(Clone, Debug)]
pub struct CompatibleComplex {
    pair: CompatiblePair,
    rep: Representation,
    first: Coboundary,
    second: Coboundary,
    sum: Coboundary,
    /// `αβ^-1 e_j` for each basis vector.
    alpha_beta_inv: Vec<Vec<Rational>>,
}

impl CompatibleComplex {
    /// Requires regular twists and a compatible representation.
    pub fn new(p: &CompatiblePair, v: &Representation) -> Result<Self> {
        let report = check_compatible_representation(p, v)?;
        if let Some(bad) = report.violations().first() {
            return Err(Error::Precondition(format!(
                "not a compatible representation: {} fails at {:?}",
                bad.axiom.name(),
                bad.indices
            )));
        }
        if !v.is_regular() {
            return Err(Error::NotInvertible("representation twists"));
        }
        let a = p.algebra();
        let first = Coboundary::new(a, v, 0, 0)?;
        let second = Coboundary::new(a, v, 1, 1)?;
        let one = Rational::from_integer(1.into());
        let sum = Coboundary::from_parts(
            &p.first().combine(&one, p.second(), &one),
            &v.actions()[0].combine(&one, &v.actions()[1], &one),
            a.alpha(),
            a.beta(),
            v.alpha_v(),
            v.beta_v(),
        )?;
        let alpha_beta_inv = columns(&(a.alpha() * &a.beta_inverse()?));
        Ok(Self {
            pair: p.clone(),
            rep: v.clone(),
            first,
            second,
            sum,
            alpha_beta_inv,
        })
    }

    /// `¹δ`, the coboundary of the first structure.
    pub fn first(&self) -> &Coboundary {
        &self.first
    }

    pub fn second(&self) -> &Coboundary {
        &self.second
    }

    /// Coboundary of `(g, μ_1 + μ_2)` with action `._1 + ._2`, twists unchanged.
    pub fn summed(&self) -> &Coboundary {
        &self.sum
    }

    /// Whether `αβ^-1(p) ._1 v = αβ^-1(p) ._2 v` for all basis `p`.
    pub fn actions_agree_on(&self, v: &[Rational]) -> bool {
        let (r1, r2) = (&self.rep.actions()[0], &self.rep.actions()[1]);
        self.alpha_beta_inv.iter().all(|p| r1.act(p, v) == r2.act(p, v))
    }

    fn require_fixed(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.rep.dim_v() {
            return Err(Error::ShapeMismatch(format!(
                "degree-0 cochain has {} entries, expected {}",
                v.len(),
                self.rep.dim_v()
            )));
        }
        if self.rep.alpha_v().mul_vec(v) != v || self.rep.beta_v().mul_vec(v) != v {
            return Err(Error::NotInCochainSpace(
                "degree-0 vector is not fixed by the twists".into(),
            ));
        }
        if !self.actions_agree_on(v) {
            return Err(Error::Precondition(
                "degree-0 vector is acted on differently by the two actions".into(),
            ));
        }
        Ok(())
    }

    /// `δ_c(f_1, .., f_n)`, whose `i`-th entry is `¹δ f_i + ²δ f_{i-1}`; at
    /// degree 0 it is `v -> ¹δ v`.
    pub fn coboundary(&self, f: &CompatibleCochain) -> Result<CompatibleCochain> {
        match f {
            CompatibleCochain::Degree0(v) => {
                self.require_fixed(v)?;
                let c = Cochain::from_vector(v.clone(), self.pair.dim());
                Ok(CompatibleCochain::Tuple(vec![self.first.apply(&c)?]))
            }
            CompatibleCochain::Tuple(fs) => {
                let n = fs.len();
                if fs.iter().any(|g| g.degree() != n) {
                    return Err(Error::ShapeMismatch(format!(
                        "a degree-{n} compatible cochain needs {n} cochains of degree {n}"
                    )));
                }
                let ones: Vec<Cochain> = fs.iter().map(|g| self.first.apply(g)).collect::<Result<_>>()?;
                let twos: Vec<Cochain> = fs.iter().map(|g| self.second.apply(g)).collect::<Result<_>>()?;
                Ok(CompatibleCochain::Tuple(interleave(ones, twos)))
            }
        }
    }

    fn coboundary_unchecked(&self, f: &CompatibleCochain) -> CompatibleCochain {
        match f {
            CompatibleCochain::Degree0(v) => {
                let c = Cochain::from_vector(v.clone(), self.pair.dim());
                CompatibleCochain::Tuple(vec![self.first.apply_unchecked(&c)])
            }
            CompatibleCochain::Tuple(fs) => {
                let ones = fs.iter().map(|g| self.first.apply_unchecked(g)).collect();
                let twos = fs.iter().map(|g| self.second.apply_unchecked(g)).collect();
                CompatibleCochain::Tuple(interleave(ones, twos))
            }
        }
    }

    /// A basis of `C^n_c`.
    pub fn basis(&self, n: usize) -> Vec<CompatibleCochain> {
        let a = self.pair.algebra();
        if n == 0 {
            return self.degree0_basis();
        }
        let single = cochain_space_basis(a, &self.rep, n);
        let zero = Cochain::zero(n, a.dim(), self.rep.dim_v());
        let mut out = Vec::with_capacity(n * single.dim());
        for slot in 0..n {
            for b in single.basis() {
                let mut fs = vec![zero.clone(); n];
                fs[slot] = b.clone();
                out.push(CompatibleCochain::Tuple(fs));
            }
        }
        out
    }

    fn degree0_basis(&self) -> Vec<CompatibleCochain> {
        let dv = self.rep.dim_v();
        let identity = RationalMatrix::identity(dv);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for t in [self.rep.alpha_v(), self.rep.beta_v()] {
            rows.extend((t - &identity).to_rows());
        }
        let (r1, r2) = (&self.rep.actions()[0], &self.rep.actions()[1]);
        for p in &self.alpha_beta_inv {
            let m = RationalMatrix::from_fn(dv, dv, |k, b| {
                let unit = crate::qlinalg::vector::unit(dv, b);
                &r1.act(p, &unit)[k] - &r2.act(p, &unit)[k]
            });
            rows.extend(m.to_rows());
        }
        if dv == 0 {
            return Vec::new();
        }
        RationalMatrix::from_rows(rows)
            .expect("rows share a length")
            .nullspace_basis()
            .into_iter()
            .map(CompatibleCochain::Degree0)
            .collect()
    }

    /// `dim H^n_c`, failing with [`Error::NotAComplex`] if `δ_c∘δ_c` is
    /// nonzero on `C^{n-1}_c`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize> {
        let basis = self.basis(n);
        let rank_n = self.image_rank(&basis);
        let rank_prev = if n == 0 {
            0
        } else {
            let prev = self.basis(n - 1);
            for b in &prev {
                if !self.coboundary_unchecked(&self.coboundary_unchecked(b)).is_zero() {
                    return Err(Error::NotAComplex { degree: n - 1 });
                }
            }
            self.image_rank(&prev)
        };
        Ok(basis.len() - rank_n - rank_prev)
    }

    fn image_rank(&self, basis: &[CompatibleCochain]) -> usize {
        let images: Vec<Vec<Rational>> = basis.iter().map(|b| self.coboundary_unchecked(b).flatten()).collect();
        match images.first() {
            None => 0,
            Some(first) => rank_of_vectors(&images, first.len()),
        }
    }

    /// Whether `δ_c∘δ_c` vanishes on every basis element of `C^n_c`.
    pub fn squares_to_zero(&self, n: usize) -> bool {
        self.basis(n)
            .iter()
            .all(|b| self.coboundary_unchecked(&self.coboundary_unchecked(b)).is_zero())
    }

    /// `(¹δ ²δ + ²δ ¹δ) f = 0` for every basis `f` of `C^n`.
    pub fn anticommutes(&self, n: usize) -> bool {
        cochain_space_basis(self.pair.algebra(), &self.rep, n)
            .basis()
            .iter()
            .all(|f| {
                let a = self.first.apply_unchecked(&self.second.apply_unchecked(f));
                let b = self.second.apply_unchecked(&self.first.apply_unchecked(f));
                a.add(&b).is_zero()
            })
    }

    /// `φ∘δ_c = δ_+∘φ` on every basis element of `C^n_c`.
    pub fn is_chain_map_at(&self, n: usize) -> bool {
        let dim_g = self.pair.dim();
        self.basis(n).iter().all(|f| {
            let left = sum_morphism_phi(&self.coboundary_unchecked(f), dim_g);
            let right = self.sum.apply_unchecked(&sum_morphism_phi(f, dim_g));
            left == right
        })
    }
}

fn interleave(ones: Vec<Cochain>, twos: Vec<Cochain>) -> Vec<Cochain> {
    let n = ones.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        out.push(match (ones.get(i), i.checked_sub(1).and_then(|k| twos.get(k))) {
            (Some(one), Some(two)) => one.add(two),
            (Some(one), None) => one.clone(),
            (None, Some(two)) => two.clone(),
            (None, None) => unreachable!("n + 1 slots from n cochains"),
        });
    }
    out
}

pub fn compatible_coboundary(
    p: &CompatiblePair,
    v: &Representation,
    f: &CompatibleCochain,
) -> Result<CompatibleCochain> {
    CompatibleComplex::new(p, v)?.coboundary(f)
}

pub fn anticommute_check(p: &CompatiblePair, v: &Representation, n: usize) -> Result<bool> {
    Ok(CompatibleComplex::new(p, v)?.anticommutes(n))
}

pub fn compatible_cohomology_dim(p: &CompatiblePair, v: &Representation, n: usize) -> Result<usize> {
    CompatibleComplex::new(p, v)?.cohomology_dim(n)
}

/// `φ_0(v) = ½v`, `φ_n(f_1, .., f_n) = f_1 + .. + f_n`.
pub fn sum_morphism_phi(f: &CompatibleCochain, dim_g: usize) -> Cochain {
    match f {
        CompatibleCochain::Degree0(v) => Cochain::from_vector(v.clone(), dim_g).scale(&ratio(1, 2)),
        CompatibleCochain::Tuple(fs) => {
            let mut iter = fs.iter();
            let first = iter.next().expect("positive degree has at least one entry").clone();
            iter.fold(first, |acc, g| acc.add(g))
        }
    }
}

pub fn chain_map_check(p: &CompatiblePair, v: &Representation, n: usize) -> Result<bool> {
    Ok(CompatibleComplex::new(p, v)?.is_chain_map_at(n))
}
