//! Exact rational linear algebra.
//!
//! Everything downstream (cochain spaces, coboundary ranks, constraint
//! systems) reduces to row reduction over the rationals, so there are no
//! tolerances anywhere in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let malformed = || Error::MalformedRational(text.to_string());
    match trimmed.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| malformed())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| malformed())?;
            if den.is_zero() {
                return Err(malformed());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(trimmed).map_err(|_| malformed())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Helpers for coordinate vectors, which are plain `Vec<Rational>`.
pub mod vector {
    use super::*;

    pub fn zeros(len: usize) -> Vec<Rational> {
        vec![Rational::zero(); len]
    }

    pub fn unit(len: usize, index: usize) -> Vec<Rational> {
        let mut v = zeros(len);
        v[index] = Rational::one();
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn add_assign(target: &mut [Rational], other: &[Rational]) {
        debug_assert_eq!(target.len(), other.len());
        for (t, o) in target.iter_mut().zip(other) {
            if !o.is_zero() {
                *t += o;
            }
        }
    }

    /// `target += coeff * other`
    pub fn add_scaled(target: &mut [Rational], coeff: &Rational, other: &[Rational]) {
        debug_assert_eq!(target.len(), other.len());
        if coeff.is_zero() {
            return;
        }
        for (t, o) in target.iter_mut().zip(other) {
            if !o.is_zero() {
                *t += coeff * o;
            }
        }
    }

    pub fn scale(coeff: &Rational, v: &[Rational]) -> Vec<Rational> {
        v.iter().map(|x| coeff * x).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn neg(v: &[Rational]) -> Vec<Rational> {
        v.iter().map(|x| -x).collect()
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(v: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = value.clone();
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds from a list of rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let converted = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_rows(converted).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = vector::zeros(self.rows);
        for (j, x) in vector::support(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn scale(&self, coeff: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| coeff * x).collect(),
        }
    }

    /// Integer power of a square matrix.
    pub fn pow(&self, exponent: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Self::identity(self.rows);
        for _ in 0..exponent {
            result = &result * self;
        }
        result
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.is_square() && other.is_square() && self.rows == other.rows && self * other == other * self
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols,
            entries,
        })
    }

    /// Exact inverse, or `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (reduced, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Determinant of the square submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Rational {
        assert_eq!(rows.len(), cols.len(), "minor needs a square selection");
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone()).determinant()
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if found != col {
                m.swap_rows(found, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let updated = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, updated);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).recip();
            for j in col..m.cols {
                let scaled = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, scaled);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let p = m.get(pivot_row, j);
                    if p.is_zero() {
                        continue;
                    }
                    let updated = m.get(r, j) - &factor * p;
                    m.set(r, j, updated);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{v : Mv = 0}`, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let (reduced, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vector::zeros(self.cols);
                v[free] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Rank of a set of vectors of equal length.
pub fn rank_of_vectors(vectors: &[Vec<Rational>], len: usize) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    let entries = vectors.iter().flat_map(|v| v.iter().cloned()).collect();
    RationalMatrix {
        rows: vectors.len(),
        cols: len,
        entries,
    }
    .rank()
}

impl<'a> Mul<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::add(&self.entries, &rhs.entries),
        }
    }
}

impl<'a> Sub<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::sub(&self.entries, &rhs.entries),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::neg(&self.entries),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Sign of a permutation given as a list of distinct comparable items.
pub fn permutation_sign<T: Ord>(items: &[T]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] > items[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(m(&[&[2, 4], &[1, 2]]).rref(), m(&[&[1, 2], &[0, 0]]));
        assert_eq!(RationalMatrix::identity(3).rref(), RationalMatrix::identity(3));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rref(), RationalMatrix::identity(2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[3, 6]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(RationalMatrix::identity(2).nullspace_basis().is_empty());
        assert_eq!(RationalMatrix::zeros(1, 3).nullspace_basis().len(), 3);
        let single = m(&[&[1, 2]]);
        let basis = single.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert!(vector::is_zero(&single.mul_vec(&basis[0])));
        assert_eq!(basis[0], vec![rat(-2), rat(1)]);
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let a = RationalMatrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), ratio(1, 2)]]).unwrap();
        assert!(a.inverse().is_none());
        let b = m(&[&[1, 2], &[3, 4]]);
        let inv = b.inverse().unwrap();
        assert!((&b * &inv).is_identity());
        assert_eq!(*inv.get(0, 0), rat(-2));
        assert_eq!(*inv.get(1, 0), ratio(3, 2));
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert_eq!(parse_rational("2/-4").unwrap(), ratio(-1, 2));
        assert!(matches!(parse_rational("3/0"), Err(Error::MalformedRational(_))));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }

    #[test]
    fn block_diag_and_pow() {
        let a = m(&[&[2]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let d = a.block_diag(&b);
        assert_eq!(d, m(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        assert!(b.pow(2).is_identity());
        assert_eq!(a.pow(3), m(&[&[8]]));
    }

    #[test]
    fn determinant_and_minor() {
        let a = m(&[&[2, 0, 1], &[1, 3, 0], &[0, 1, 1]]);
        assert_eq!(a.determinant(), rat(7));
        assert_eq!(a.minor(&[0, 2], &[0, 2]), rat(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), rat(0));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
            (1..=max, 1..=max).prop_flat_map(|(r, c)| {
                proptest::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |cells| {
                    let entries = cells.into_iter().map(|(n, d)| ratio(n, d)).collect();
                    RationalMatrix::from_entries(r, c, entries).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn rref_is_idempotent(a in matrix(5)) {
                let r = a.rref();
                prop_assert_eq!(r.rref(), r);
            }

            #[test]
            fn rank_plus_nullity_is_columns(a in matrix(5)) {
                prop_assert_eq!(a.rank() + a.nullspace_basis().len(), a.cols());
            }

            #[test]
            fn nullspace_is_annihilated(a in matrix(5)) {
                for v in a.nullspace_basis() {
                    prop_assert!(vector::is_zero(&a.mul_vec(&v)));
                }
            }

            #[test]
            fn inverse_when_full_rank(a in matrix(4)) {
                prop_assume!(a.is_square());
                match a.inverse() {
                    Some(inv) => prop_assert!((&a * &inv).is_identity()),
                    None => prop_assert!(a.rank() < a.rows()),
                }
                prop_assert_eq!(a.is_invertible(), !a.determinant().is_zero());
            }

            #[test]
            fn rational_text_round_trips(n in -1000i64..1000, d in 1i64..50) {
                let x = ratio(n, d);
                prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
            }
        }
    }
}
