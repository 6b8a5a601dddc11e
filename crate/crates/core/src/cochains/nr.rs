use super::{increasing_tuples, sign, Cochain};
use crate::algebra::BiHomAlgebra;
use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

fn check_operand(c: &Cochain, a: &BiHomAlgebra, name: &str) -> Result<()> {
    if c.degree() == 0 {
        return Err(Error::DegreeZeroOperand);
    }
    if c.dim_in() != a.dim() || c.dim_out() != a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "{name} maps dimension {} to {}, algebra has dimension {}",
            c.dim_in(),
            c.dim_out(),
            a.dim()
        )));
    }
    if !c.intertwines(a.alpha(), a.beta(), a.alpha(), a.beta()) {
        return Err(Error::NotInCochainSpace(format!("{name} of degree {}", c.degree())));
    }
    Ok(())
}

/// `(P ◇ Q)(p_1, .., p_{m+n+1})`: a signed sum over `(n+1, m)`-shuffles of
/// `P(Q(p_σ(1), .., p_σ(n+1)), αβ^n p_σ(n+2), .., αβ^n p_σ(m+n+1))`, where
/// `P` has degree `m+1` and `Q` degree `n+1`.
pub fn nr_diamond(p: &Cochain, q: &Cochain, a: &BiHomAlgebra) -> Result<Cochain> {
    check_operand(p, a, "P")?;
    check_operand(q, a, "Q")?;
    Ok(nr_diamond_unchecked(p, q, a.alpha(), a.beta()))
}

/// `P ◇ Q - (-1)^{mn} Q ◇ P`.
pub fn nr_bracket(p: &Cochain, q: &Cochain, a: &BiHomAlgebra) -> Result<Cochain> {
    check_operand(p, a, "P")?;
    check_operand(q, a, "Q")?;
    Ok(nr_bracket_unchecked(p, q, a.alpha(), a.beta()))
}

pub(crate) fn nr_bracket_unchecked(p: &Cochain, q: &Cochain, alpha: &RationalMatrix, beta: &RationalMatrix) -> Cochain {
    let (m, n) = (p.degree() - 1, q.degree() - 1);
    let pq = nr_diamond_unchecked(p, q, alpha, beta);
    let qp = nr_diamond_unchecked(q, p, alpha, beta);
    pq.sub(&qp.scale(&sign(m * n)))
}

pub(crate) fn nr_diamond_unchecked(p: &Cochain, q: &Cochain, alpha: &RationalMatrix, beta: &RationalMatrix) -> Cochain {
    let d = alpha.rows();
    let (deg_p, deg_q) = (p.degree(), q.degree());
    let total = deg_p + deg_q - 1;
    let twist = alpha * &beta.pow((deg_q - 1) as u32);
    let twisted: Vec<Vec<Rational>> = (0..d).map(|j| twist.column(j)).collect();
    // Shuffles are determined by which positions feed Q.
    let shuffles: Vec<(Vec<usize>, Vec<usize>, Rational)> = increasing_tuples(total, deg_q)
        .into_iter()
        .map(|front| {
            let back: Vec<usize> = (0..total).filter(|i| !front.contains(i)).collect();
            let inversions: usize = front.iter().map(|&f| back.iter().filter(|&&b| b < f).count()).sum();
            (front, back, sign(inversions))
        })
        .collect();
    Cochain::from_fn(total, d, d, |tuple| {
        let mut out = vector::zeros(d);
        for (front, back, s) in &shuffles {
            let inner_args: Vec<usize> = front.iter().map(|&i| tuple[i]).collect();
            let inner = q.eval_basis(&inner_args);
            if vector::is_zero(&inner) {
                continue;
            }
            let mut args: Vec<&[Rational]> = Vec::with_capacity(deg_p);
            args.push(&inner);
            args.extend(back.iter().map(|&i| twisted[tuple[i]].as_slice()));
            vector::add_scaled(&mut out, s, &p.eval(&args));
        }
        out
    })
}

/// Whether `[μ, μ]_NR = 0` for the given bracket.
pub fn mc_check(a: &BiHomAlgebra, which: usize) -> Result<bool> {
    let mu = Cochain::from_bracket(a.bracket(which)?)?;
    Ok(nr_bracket(&mu, &mu, a)?.is_zero())
}
