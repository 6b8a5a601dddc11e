//! Skew-symmetric cochains, the Nijenhuis–Richardson bracket, the
//! Chevalley–Eilenberg coboundary and cohomology dimensions.

mod coboundary;
mod nr;
mod space;

pub use coboundary::{ce_coboundary, coboundary_vs_nr, cohomology_dim, Coboundary};
pub use nr::{mc_check, nr_bracket, nr_diamond};
pub use space::{cochain_space_basis, twisted_cochain_basis, BiHomCochainSpace};

use num_traits::One;

use crate::algebra::BracketTensor;
use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(n, k, i + 1, current, out);
            current.pop();
        }
    }
    go(n, k, 0, &mut current, &mut out);
    out
}

/// Position of a strictly increasing tuple in [`increasing_tuples`] order.
pub(crate) fn tuple_rank(tuple: &[usize], n: usize) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &c) in tuple.iter().enumerate() {
        for j in start..c {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        start = c + 1;
    }
    rank
}

/// Sorts `indices` in place and returns the sign of the sorting
/// permutation, or `None` if an index repeats.
fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
        if j > 0 && indices[j - 1] == indices[j] {
            return None;
        }
    }
    Some(negative)
}

/// A skew-symmetric multilinear map `g^n -> V`.
///
/// Only the values on strictly increasing basis tuples are stored; every
/// other value follows from skew-symmetry. A degree-0 cochain is a single
/// vector of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    dim_in: usize,
    dim_out: usize,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn zero(degree: usize, dim_in: usize, dim_out: usize) -> Self {
        Self {
            degree,
            dim_in,
            dim_out,
            values: vector::zeros(binomial(dim_in, degree) * dim_out),
        }
    }

    /// Builds a cochain from its value on each increasing basis tuple.
    pub fn from_fn(degree: usize, dim_in: usize, dim_out: usize, mut f: impl FnMut(&[usize]) -> Vec<Rational>) -> Self {
        let mut values = Vec::with_capacity(binomial(dim_in, degree) * dim_out);
        for tuple in increasing_tuples(dim_in, degree) {
            let v = f(&tuple);
            assert_eq!(v.len(), dim_out, "cochain value of wrong length");
            values.extend(v);
        }
        Self {
            degree,
            dim_in,
            dim_out,
            values,
        }
    }

    /// Flat values, tuple-major in [`increasing_tuples`] order.
    pub fn from_values(degree: usize, dim_in: usize, dim_out: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = binomial(dim_in, degree) * dim_out;
        if values.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "degree-{degree} cochain on dimension {dim_in} needs {expected} values, got {}",
                values.len()
            )));
        }
        Ok(Self {
            degree,
            dim_in,
            dim_out,
            values,
        })
    }

    /// From `(i_1, .., i_n, k)` entries with `i_1 < .. < i_n`; unlisted
    /// entries are zero.
    pub fn from_entries(
        degree: usize,
        dim_in: usize,
        dim_out: usize,
        entries: &[(Vec<usize>, Rational)],
    ) -> Result<Self> {
        let mut c = Self::zero(degree, dim_in, dim_out);
        for (index, value) in entries {
            if index.len() != degree + 1 {
                return Err(Error::ShapeMismatch(format!(
                    "cochain entry {index:?} should have {} indices",
                    degree + 1
                )));
            }
            let (inputs, k) = index.split_at(degree);
            if inputs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::ShapeMismatch(format!(
                    "cochain entry {index:?} is not strictly increasing"
                )));
            }
            if let Some(&bad) = inputs.iter().find(|&&i| i >= dim_in) {
                return Err(Error::IndexOutOfRange {
                    what: "cochain input",
                    index: bad,
                    len: dim_in,
                });
            }
            if k[0] >= dim_out {
                return Err(Error::IndexOutOfRange {
                    what: "cochain output",
                    index: k[0],
                    len: dim_out,
                });
            }
            let slot = tuple_rank(inputs, dim_in) * dim_out + k[0];
            c.values[slot] = value.clone();
        }
        Ok(c)
    }

    /// Nonzero entries as `(i_1, .., i_n, k)` with increasing inputs.
    pub fn entries(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut out = Vec::new();
        for (rank, tuple) in increasing_tuples(self.dim_in, self.degree).into_iter().enumerate() {
            for (k, value) in vector::support(self.value_at_rank(rank)) {
                let mut index = tuple.clone();
                index.push(k);
                out.push((index, value.clone()));
            }
        }
        out
    }

    pub fn from_vector(v: Vec<Rational>, dim_in: usize) -> Self {
        Self {
            degree: 0,
            dim_in,
            dim_out: v.len(),
            values: v,
        }
    }

    /// The degree-1 cochain `e_j -> m e_j`.
    pub fn from_linear_map(m: &RationalMatrix) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |t| m.column(t[0]))
    }

    /// A bracket viewed as a degree-2 cochain with values in the algebra.
    /// Only ordinarily skew brackets qualify.
    pub fn from_bracket(bracket: &BracketTensor) -> Result<Self> {
        if !bracket.is_plain_skew() {
            return Err(Error::NotSkew);
        }
        let d = bracket.dim();
        Ok(Self::from_fn(2, d, d, |t| bracket.basis_bracket(t[0], t[1]).to_vec()))
    }

    pub fn to_bracket(&self) -> Result<BracketTensor> {
        if self.degree != 2 || self.dim_in != self.dim_out {
            return Err(Error::ShapeMismatch(format!(
                "a bracket is an algebra-valued 2-cochain, got degree {} into dimension {}",
                self.degree, self.dim_out
            )));
        }
        Ok(BracketTensor::from_basis_brackets(self.dim_in, |i, j| {
            self.eval_basis(&[i, j])
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The degree-0 vector, or the value on the `rank`-th increasing tuple.
    pub fn value_at_rank(&self, rank: usize) -> &[Rational] {
        &self.values[rank * self.dim_out..(rank + 1) * self.dim_out]
    }

    /// Value on basis vectors in any order.
    pub fn eval_basis(&self, indices: &[usize]) -> Vec<Rational> {
        assert_eq!(indices.len(), self.degree, "wrong number of arguments");
        let mut sorted = indices.to_vec();
        match sort_with_sign(&mut sorted) {
            None => vector::zeros(self.dim_out),
            Some(negative) => {
                let v = self.value_at_rank(tuple_rank(&sorted, self.dim_in));
                if negative {
                    vector::neg(v)
                } else {
                    v.to_vec()
                }
            }
        }
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval<A: AsRef<[Rational]>>(&self, args: &[A]) -> Vec<Rational> {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let supports: Vec<Vec<(usize, &Rational)>> =
            args.iter().map(|a| vector::support(a.as_ref()).collect()).collect();
        let mut out = vector::zeros(self.dim_out);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut chosen = Vec::with_capacity(self.degree);
        self.accumulate(&supports, &mut chosen, Rational::one(), &mut out);
        out
    }

    fn accumulate(
        &self,
        supports: &[Vec<(usize, &Rational)>],
        chosen: &mut Vec<usize>,
        coeff: Rational,
        out: &mut [Rational],
    ) {
        let depth = chosen.len();
        if depth == supports.len() {
            let mut sorted = chosen.clone();
            if let Some(negative) = sort_with_sign(&mut sorted) {
                let v = self.value_at_rank(tuple_rank(&sorted, self.dim_in));
                let c = if negative { -coeff } else { coeff };
                vector::add_scaled(out, &c, v);
            }
            return;
        }
        for &(i, x) in &supports[depth] {
            if chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            self.accumulate(supports, chosen, &coeff * x, out);
            chosen.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.values)
    }

    fn assert_same_shape(&self, other: &Self) {
        assert_eq!(
            (self.degree, self.dim_in, self.dim_out),
            (other.degree, other.dim_in, other.dim_out),
            "cochains of different shape"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_shape(other);
        Self {
            values: vector::add(&self.values, &other.values),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_shape(other);
        Self {
            values: vector::sub(&self.values, &other.values),
            ..self.clone()
        }
    }

    pub fn scale(&self, coeff: &Rational) -> Self {
        Self {
            values: vector::scale(coeff, &self.values),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// `t_out(f(e_I)) == f(t_in e_I)` on every increasing tuple.
    pub fn commutes_with(&self, t_in: &RationalMatrix, t_out: &RationalMatrix) -> bool {
        let cols: Vec<_> = (0..self.dim_in).map(|j| t_in.column(j)).collect();
        increasing_tuples(self.dim_in, self.degree)
            .iter()
            .enumerate()
            .all(|(rank, tuple)| {
                let args: Vec<&[Rational]> = tuple.iter().map(|&i| cols[i].as_slice()).collect();
                t_out.mul_vec(self.value_at_rank(rank)) == self.eval(&args)
            })
    }

    /// Membership in the BiHom cochain space: `alpha_V f = f alpha^n` and
    /// `beta_V f = f beta^n`.
    pub fn intertwines(
        &self,
        alpha: &RationalMatrix,
        beta: &RationalMatrix,
        alpha_v: &RationalMatrix,
        beta_v: &RationalMatrix,
    ) -> bool {
        self.commutes_with(alpha, alpha_v) && self.commutes_with(beta, beta_v)
    }
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
