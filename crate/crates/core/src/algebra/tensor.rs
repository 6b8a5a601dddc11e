use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

/// Structure constants of a bilinear map `g x g -> g`:
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
///
/// Stored in full; skew-symmetry is a property to check, not a storage
/// constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketTensor {
    dim: usize,
    c: Vec<Rational>,
}

impl BracketTensor {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            c: vector::zeros(dim * dim * dim),
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        Self { dim, c }
    }

    /// Builds the tensor from the value of every basis bracket.
    pub fn from_basis_brackets(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                debug_assert_eq!(v.len(), dim);
                c.extend(v);
            }
        }
        Self { dim, c }
    }

    /// Builds from nested `c[i][j][k]`, validating every index range.
    pub fn from_nested(dim: usize, nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        if nested.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "tensor has {} outer entries, expected {dim}",
                nested.len()
            )));
        }
        let mut c = Vec::with_capacity(dim * dim * dim);
        for (i, plane) in nested.into_iter().enumerate() {
            if plane.len() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "tensor[{i}] has {} entries, expected {dim}",
                    plane.len()
                )));
            }
            for (j, row) in plane.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::ShapeMismatch(format!(
                        "tensor[{i}][{j}] has {} entries, expected {dim}",
                        row.len()
                    )));
                }
                c.extend(row);
            }
        }
        Ok(Self { dim, c })
    }

    /// Skew-symmetric tensor from the brackets `[e_i, e_j]` with `i < j`;
    /// entries are `(i, j, k, value)` and `[e_j, e_i]` is filled in as the
    /// negative.
    pub fn skew_from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Self {
        let mut t = Self::zero(dim);
        for (i, j, k, value) in entries {
            assert!(i != j, "diagonal entry in a skew tensor");
            let idx = t.index(*i, *j, *k);
            t.c[idx] += value;
            let idx = t.index(*j, *i, *k);
            t.c[idx] -= value;
        }
        t
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_bracket(i, j).to_vec()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let idx = self.index(i, j, k);
        self.c[idx] = value;
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vector::zeros(self.dim);
        for (i, xi) in vector::support(x) {
            for (j, yj) in vector::support(y) {
                vector::add_scaled(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Ordinary skew-symmetry `[e_i, e_j] = -[e_j, e_i]`.
    pub fn is_plain_skew(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                self.basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    pub fn scale(&self, coeff: &Rational) -> Self {
        Self {
            dim: self.dim,
            c: vector::scale(coeff, &self.c),
        }
    }

    /// `lambda * self + eta * other`
    pub fn combine(&self, lambda: &Rational, other: &Self, eta: &Rational) -> Self {
        assert_eq!(self.dim, other.dim, "combining tensors of different dimension");
        Self {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| lambda * a + eta * b).collect(),
        }
    }

    /// The bracket `(p, q) -> post([pre_left p, pre_right q])`, with
    /// `post = None` meaning the identity.
    pub fn transform(
        &self,
        pre_left: &RationalMatrix,
        pre_right: &RationalMatrix,
        post: Option<&RationalMatrix>,
    ) -> Self {
        let d = self.dim;
        let left: Vec<_> = (0..d).map(|i| pre_left.column(i)).collect();
        let right: Vec<_> = (0..d).map(|j| pre_right.column(j)).collect();
        Self::from_basis_brackets(d, |i, j| {
            let v = self.apply(&left[i], &right[j]);
            match post {
                Some(m) => m.mul_vec(&v),
                None => v,
            }
        })
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }
}

/// Structure constants of an action `g x V -> V`:
/// `e_i . v_a = sum_b rho[i][a][b] v_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionTensor {
    dim_g: usize,
    dim_v: usize,
    rho: Vec<Rational>,
}

impl ActionTensor {
    pub fn zero(dim_g: usize, dim_v: usize) -> Self {
        Self {
            dim_g,
            dim_v,
            rho: vector::zeros(dim_g * dim_v * dim_v),
        }
    }

    pub fn from_fn(dim_g: usize, dim_v: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut rho = Vec::with_capacity(dim_g * dim_v * dim_v);
        for i in 0..dim_g {
            for a in 0..dim_v {
                for b in 0..dim_v {
                    rho.push(f(i, a, b));
                }
            }
        }
        Self { dim_g, dim_v, rho }
    }

    /// The adjoint action `e_i . e_a = [e_i, e_a]`.
    pub fn adjoint(bracket: &BracketTensor) -> Self {
        let d = bracket.dim();
        Self::from_fn(d, d, |i, a, b| bracket.coeff(i, a, b).clone())
    }

    pub fn from_nested(dim_g: usize, dim_v: usize, nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        if nested.len() != dim_g {
            return Err(Error::ShapeMismatch(format!(
                "action has {} outer entries, expected {dim_g}",
                nested.len()
            )));
        }
        let mut rho = Vec::with_capacity(dim_g * dim_v * dim_v);
        for (i, plane) in nested.into_iter().enumerate() {
            if plane.len() != dim_v {
                return Err(Error::ShapeMismatch(format!(
                    "action[{i}] has {} entries, expected {dim_v}",
                    plane.len()
                )));
            }
            for (a, row) in plane.into_iter().enumerate() {
                if row.len() != dim_v {
                    return Err(Error::ShapeMismatch(format!(
                        "action[{i}][{a}] has {} entries, expected {dim_v}",
                        row.len()
                    )));
                }
                rho.extend(row);
            }
        }
        Ok(Self { dim_g, dim_v, rho })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim_g)
            .map(|i| (0..self.dim_v).map(|a| self.basis_action(i, a).to_vec()).collect())
            .collect()
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// `e_i . v_a` as a coordinate vector.
    pub fn basis_action(&self, i: usize, a: usize) -> &[Rational] {
        let start = (i * self.dim_v + a) * self.dim_v;
        &self.rho[start..start + self.dim_v]
    }

    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vector::zeros(self.dim_v);
        for (i, xi) in vector::support(x) {
            for (a, va) in vector::support(v) {
                vector::add_scaled(&mut out, &(xi * va), self.basis_action(i, a));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().all(Zero::is_zero)
    }

    pub fn combine(&self, lambda: &Rational, other: &Self, eta: &Rational) -> Self {
        assert_eq!((self.dim_g, self.dim_v), (other.dim_g, other.dim_v));
        Self {
            dim_g: self.dim_g,
            dim_v: self.dim_v,
            rho: self
                .rho
                .iter()
                .zip(&other.rho)
                .map(|(a, b)| lambda * a + eta * b)
                .collect(),
        }
    }
}
