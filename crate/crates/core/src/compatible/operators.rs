use super::CompatiblePair;
use crate::algebra::{columns, BiHomAlgebra, BracketTensor};
use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

fn require_commuting(a: &BiHomAlgebra, op: &RationalMatrix, name: &str) -> Result<()> {
    let d = a.dim();
    if op.rows() != d || op.cols() != d {
        return Err(Error::ShapeMismatch(format!("operator {name} must be {d}x{d}")));
    }
    if !op.commutes_with(a.alpha()) || !op.commutes_with(a.beta()) {
        return Err(Error::Precondition(format!(
            "operator {name} does not commute with alpha and beta"
        )));
    }
    Ok(())
}

/// `[p, q]_N = [Np, q] - [Nq, p] - N[p, q]`.
pub fn nijenhuis_bracket(bracket: &BracketTensor, n: &RationalMatrix) -> BracketTensor {
    let d = bracket.dim();
    let images = columns(n);
    BracketTensor::from_basis_brackets(d, |i, j| {
        let mut out = bracket.apply(&images[i], &vector::unit(d, j));
        out = vector::sub(&out, &bracket.apply(&images[j], &vector::unit(d, i)));
        vector::sub(&out, &n.mul_vec(bracket.basis_bracket(i, j)))
    })
}

/// `[Np, Nq] = N([p, q]_N)` on all basis pairs, for the first bracket of `a`.
pub fn nijenhuis_check(a: &BiHomAlgebra, n: &RationalMatrix) -> Result<bool> {
    require_commuting(a, n, "N")?;
    let bracket = a.bracket(0)?;
    let deformed = nijenhuis_bracket(bracket, n);
    let images = columns(n);
    let d = a.dim();
    Ok(
        (0..d)
            .all(|i| (0..d).all(|j| bracket.apply(&images[i], &images[j]) == n.mul_vec(deformed.basis_bracket(i, j)))),
    )
}

/// The pair `([,], [,]_N)`. Fails unless `N` is Nijenhuis and the pair
/// passes every compatibility check.
pub fn nijenhuis_deform(a: &BiHomAlgebra, n: &RationalMatrix) -> Result<CompatiblePair> {
    if !nijenhuis_check(a, n)? {
        return Err(Error::Precondition("N is not a Nijenhuis operator".into()));
    }
    let bracket = a.bracket(0)?;
    let pair = CompatiblePair::new(a.with_brackets(vec![bracket.clone(), nijenhuis_bracket(bracket, n)])?)?;
    expect_compatible(pair)
}

fn expect_compatible(pair: CompatiblePair) -> Result<CompatiblePair> {
    let report = super::check_compatible_pair(&pair);
    match report.violations().first() {
        None => Ok(pair),
        Some(v) => Err(Error::Precondition(format!(
            "constructed pair fails {} at {:?}",
            v.axiom.name(),
            v.indices
        ))),
    }
}

/// Parameters `(s, l, λ)` of an `sl`-Rota–Baxter operator of weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterWeight {
    pub s: u32,
    pub l: u32,
    pub lambda: Rational,
}

impl RotaBaxterWeight {
    pub fn new(s: u32, l: u32, lambda: Rational) -> Self {
        Self { s, l, lambda }
    }

    fn twist(&self, a: &BiHomAlgebra) -> RationalMatrix {
        &a.alpha().pow(self.s) * &a.beta().pow(self.l)
    }
}

/// `[p, q]_R = [α^s β^l R p, q] + [p, α^s β^l R q] + λ[p, q]`.
pub fn rb_induced_bracket(a: &BiHomAlgebra, r: &RationalMatrix, w: &RotaBaxterWeight) -> Result<BracketTensor> {
    require_commuting(a, r, "R")?;
    Ok(induced(a.bracket(0)?, &(&w.twist(a) * r), &w.lambda))
}

fn induced(bracket: &BracketTensor, twisted_r: &RationalMatrix, lambda: &Rational) -> BracketTensor {
    let d = bracket.dim();
    let images = columns(twisted_r);
    BracketTensor::from_basis_brackets(d, |i, j| {
        let mut out = bracket.apply(&images[i], &vector::unit(d, j));
        vector::add_assign(&mut out, &bracket.apply(&vector::unit(d, i), &images[j]));
        vector::add_scaled(&mut out, lambda, bracket.basis_bracket(i, j));
        out
    })
}

/// `[Rp, Rq] = R([p, q]_R)` on all basis pairs.
pub fn rb_check(a: &BiHomAlgebra, r: &RationalMatrix, w: &RotaBaxterWeight) -> Result<bool> {
    let induced = rb_induced_bracket(a, r, w)?;
    let bracket = a.bracket(0)?;
    let images = columns(r);
    let d = a.dim();
    Ok((0..d).all(|i| (0..d).all(|j| bracket.apply(&images[i], &images[j]) == r.mul_vec(induced.basis_bracket(i, j)))))
}

/// `[Rp, Sq] + [Sp, Rq] = R([α^sβ^l Sp, q] + [p, α^sβ^l Sq]) + S([α^sβ^l Rp, q] + [p, α^sβ^l Rq])`.
pub fn rb_compatible_check(
    a: &BiHomAlgebra,
    r: &RationalMatrix,
    s: &RationalMatrix,
    w: &RotaBaxterWeight,
) -> Result<bool> {
    require_commuting(a, r, "R")?;
    require_commuting(a, s, "S")?;
    let bracket = a.bracket(0)?;
    let twist = w.twist(a);
    let zero = Rational::from_integer(0.into());
    let r_terms = induced(bracket, &(&twist * r), &zero);
    let s_terms = induced(bracket, &(&twist * s), &zero);
    let (r_e, s_e) = (columns(r), columns(s));
    let d = a.dim();
    Ok((0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = vector::add(&bracket.apply(&r_e[i], &s_e[j]), &bracket.apply(&s_e[i], &r_e[j]));
            let rhs = vector::add(
                &r.mul_vec(s_terms.basis_bracket(i, j)),
                &s.mul_vec(r_terms.basis_bracket(i, j)),
            );
            lhs == rhs
        })
    }))
}

/// The pair `([,]_R, [,]_S)` of induced brackets.
pub fn rb_compatible_pair(
    a: &BiHomAlgebra,
    r: &RationalMatrix,
    s: &RationalMatrix,
    w: &RotaBaxterWeight,
) -> Result<CompatiblePair> {
    for (name, op) in [("R", r), ("S", s)] {
        if !rb_check(a, op, w)? {
            return Err(Error::Precondition(format!("{name} is not a Rota-Baxter operator")));
        }
    }
    if !rb_compatible_check(a, r, s, w)? {
        return Err(Error::Precondition("R and S are not compatible".into()));
    }
    let pair = CompatiblePair::new(a.with_brackets(vec![rb_induced_bracket(a, r, w)?, rb_induced_bracket(a, s, w)?])?)?;
    expect_compatible(pair)
}
