//! BiHom-Lie algebras given by structure constants, their morphisms and
//! representations, and the basic constructions on them.

mod report;
mod representation;
mod tensor;

pub use report::{Axiom, AxiomReport, Violation};
pub use representation::{check_representation, semidirect_bracket, semidirect_product, Representation};
pub use tensor::{ActionTensor, BracketTensor};

use crate::error::{Error, Result};
use crate::qlinalg::{vector, Rational, RationalMatrix};

/// A finite-dimensional vector space with one or more brackets and a pair of
/// twist maps. Whether it actually is a BiHom-Lie algebra is decided by
/// [`check_bihom_lie`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomAlgebra {
    dim: usize,
    brackets: Vec<BracketTensor>,
    alpha: RationalMatrix,
    beta: RationalMatrix,
    regular: bool,
}

impl BiHomAlgebra {
    pub fn new(alpha: RationalMatrix, beta: RationalMatrix, brackets: Vec<BracketTensor>) -> Result<Self> {
        let dim = alpha.rows();
        if !alpha.is_square() || beta.rows() != dim || beta.cols() != dim {
            return Err(Error::ShapeMismatch(format!(
                "twists must both be {dim}x{dim}, got alpha {}x{} and beta {}x{}",
                alpha.rows(),
                alpha.cols(),
                beta.rows(),
                beta.cols()
            )));
        }
        if brackets.is_empty() {
            return Err(Error::Precondition("an algebra needs at least one bracket".into()));
        }
        if let Some(b) = brackets.iter().find(|b| b.dim() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "bracket of dimension {} on a {dim}-dimensional algebra",
                b.dim()
            )));
        }
        let regular = alpha.is_invertible() && beta.is_invertible();
        Ok(Self {
            dim,
            brackets,
            alpha,
            beta,
            regular,
        })
    }

    /// An ordinary (untwisted) algebra: `alpha = beta = id`.
    pub fn untwisted(bracket: BracketTensor) -> Self {
        let dim = bracket.dim();
        Self::new(
            RationalMatrix::identity(dim),
            RationalMatrix::identity(dim),
            vec![bracket],
        )
        .expect("identity twists always fit")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn brackets(&self) -> &[BracketTensor] {
        &self.brackets
    }

    pub fn bracket(&self, which: usize) -> Result<&BracketTensor> {
        self.brackets.get(which).ok_or(Error::IndexOutOfRange {
            what: "bracket",
            index: which,
            len: self.brackets.len(),
        })
    }

    pub fn alpha(&self) -> &RationalMatrix {
        &self.alpha
    }

    pub fn beta(&self) -> &RationalMatrix {
        &self.beta
    }

    /// Both twists invertible.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn alpha_inverse(&self) -> Result<RationalMatrix> {
        self.alpha.inverse().ok_or(Error::NotInvertible("alpha"))
    }

    pub fn beta_inverse(&self) -> Result<RationalMatrix> {
        self.beta.inverse().ok_or(Error::NotInvertible("beta"))
    }

    /// Same space and twists, different brackets.
    pub fn with_brackets(&self, brackets: Vec<BracketTensor>) -> Result<Self> {
        Self::new(self.alpha.clone(), self.beta.clone(), brackets)
    }

    /// Keeps only the selected bracket.
    pub fn single(&self, which: usize) -> Result<Self> {
        let b = self.bracket(which)?.clone();
        self.with_brackets(vec![b])
    }

    /// Same brackets, with `beta` replaced by `alpha` (the Hom-Lie
    /// specialization).
    pub fn with_beta_equal_alpha(&self) -> Self {
        Self::new(self.alpha.clone(), self.alpha.clone(), self.brackets.clone())
            .expect("alpha already has the right shape")
    }
}

/// An algebra with a (not necessarily associative) product and twists, the
/// input of [`assoc_commutator_lie`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    pub product: BracketTensor,
    pub alpha: RationalMatrix,
    pub beta: RationalMatrix,
}

impl AssociativeAlgebra {
    pub fn new(product: BracketTensor, alpha: RationalMatrix, beta: RationalMatrix) -> Result<Self> {
        let d = product.dim();
        for (name, m) in [("alpha", &alpha), ("beta", &beta)] {
            if m.rows() != d || m.cols() != d {
                return Err(Error::ShapeMismatch(format!("{name} must be {d}x{d}")));
            }
        }
        Ok(Self { product, alpha, beta })
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }
}

pub(crate) fn columns(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn check_twists_commute(report: &mut AxiomReport, subject: &str, alpha: &RationalMatrix, beta: &RationalMatrix) {
    let ab = alpha * beta;
    let ba = beta * alpha;
    report.expect_equal(
        Axiom::TwistsCommute,
        subject,
        &[],
        ab.entries().to_vec(),
        ba.entries().to_vec(),
    );
}

/// Twisted skew-symmetry, the BiHom-Jacobi identity and commuting twists for
/// one bracket.
pub fn check_bihom_lie(a: &BiHomAlgebra, which: usize) -> Result<AxiomReport> {
    let bracket = a.bracket(which)?;
    let subject = format!("bracket {which}");
    let d = a.dim();
    let mut report = AxiomReport::new();
    check_twists_commute(&mut report, &subject, a.alpha(), a.beta());

    let alpha_e = columns(a.alpha());
    let beta_e = columns(a.beta());
    let beta2_e = columns(&a.beta().pow(2));

    report.mark_checked(Axiom::SkewSymmetry);
    for i in 0..d {
        for j in i..d {
            let lhs = bracket.apply(&beta_e[i], &alpha_e[j]);
            let rhs = vector::neg(&bracket.apply(&beta_e[j], &alpha_e[i]));
            report.expect_equal(Axiom::SkewSymmetry, &subject, &[i, j], lhs, rhs);
        }
    }

    // inner[q][r] = [beta q, alpha r]
    let inner: Vec<Vec<Vec<Rational>>> = (0..d)
        .map(|q| (0..d).map(|r| bracket.apply(&beta_e[q], &alpha_e[r])).collect())
        .collect();
    report.mark_checked(Axiom::BiHomJacobi);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut sum = bracket.apply(&beta2_e[i], &inner[j][k]);
                vector::add_assign(&mut sum, &bracket.apply(&beta2_e[j], &inner[k][i]));
                vector::add_assign(&mut sum, &bracket.apply(&beta2_e[k], &inner[i][j]));
                report.expect_equal(Axiom::BiHomJacobi, &subject, &[i, j, k], sum, vector::zeros(d));
            }
        }
    }
    Ok(report)
}

/// Runs [`check_bihom_lie`] on every bracket.
pub fn check_all_brackets(a: &BiHomAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    for which in 0..a.brackets().len() {
        report.merge(check_bihom_lie(a, which).expect("index in range"));
    }
    report
}

/// Whether both twists are bracket morphisms.
pub fn check_multiplicative(a: &BiHomAlgebra, which: usize) -> Result<AxiomReport> {
    let bracket = a.bracket(which)?;
    let subject = format!("bracket {which}");
    let mut report = AxiomReport::new();
    report.mark_checked(Axiom::Multiplicative);
    for twist in [a.alpha(), a.beta()] {
        check_morphism_of_bracket(&mut report, &subject, twist, bracket, bracket);
    }
    Ok(report)
}

/// Records violations of `f[e_i, e_j] = [f e_i, f e_j]'`.
fn check_morphism_of_bracket(
    report: &mut AxiomReport,
    subject: &str,
    f: &RationalMatrix,
    source: &BracketTensor,
    target: &BracketTensor,
) {
    let images = columns(f);
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.mul_vec(source.basis_bracket(i, j));
            let rhs = target.apply(&images[i], &images[j]);
            report.expect_equal(Axiom::Multiplicative, subject, &[i, j], lhs, rhs);
        }
    }
}

/// Twist of an ordinary Lie algebra by commuting bracket morphisms `a`, `b`:
/// `{p, q} = [a p, b q]`. Every bracket of `l` is twisted.
pub fn yau_twist(l: &BiHomAlgebra, a: &RationalMatrix, b: &RationalMatrix) -> Result<BiHomAlgebra> {
    let d = l.dim();
    if !l.alpha().is_identity() || !l.beta().is_identity() {
        return Err(Error::Precondition(
            "the algebra to twist must have identity twists".into(),
        ));
    }
    for (name, m) in [("a", a), ("b", b)] {
        if m.rows() != d || m.cols() != d {
            return Err(Error::ShapeMismatch(format!("twist map {name} must be {d}x{d}")));
        }
    }
    let lie = check_all_brackets(l);
    if let Some(v) = lie.violations().first() {
        return Err(Error::Precondition(format!(
            "not a Lie algebra: {} fails at {:?}",
            v.axiom.name(),
            v.indices
        )));
    }
    if !a.commutes_with(b) {
        return Err(Error::Precondition("twist maps a and b do not commute".into()));
    }
    for (name, m) in [("a", a), ("b", b)] {
        for (which, bracket) in l.brackets().iter().enumerate() {
            let mut report = AxiomReport::new();
            check_morphism_of_bracket(&mut report, "", m, bracket, bracket);
            if let Some(v) = report.violations().first() {
                return Err(Error::Precondition(format!(
                    "{name} is not a morphism of bracket {which}: fails at {:?}",
                    v.indices
                )));
            }
        }
    }
    let brackets = l.brackets().iter().map(|br| br.transform(a, b, None)).collect();
    BiHomAlgebra::new(a.clone(), b.clone(), brackets)
}

/// The commutator bracket `[p, q] = p.q - (alpha^-1 beta q).(alpha beta^-1 p)`.
///
/// BiHom-associativity of the input is not checked here; see
/// [`check_bihom_associative`].
pub fn assoc_commutator_lie(a: &AssociativeAlgebra) -> Result<BiHomAlgebra> {
    let alpha_inv = a.alpha.inverse().ok_or(Error::NotInvertible("alpha"))?;
    let beta_inv = a.beta.inverse().ok_or(Error::NotInvertible("beta"))?;
    let left = columns(&(&alpha_inv * &a.beta));
    let right = columns(&(&a.alpha * &beta_inv));
    let product = &a.product;
    let bracket = BracketTensor::from_basis_brackets(a.dim(), |i, j| {
        vector::sub(product.basis_bracket(i, j), &product.apply(&left[j], &right[i]))
    });
    BiHomAlgebra::new(a.alpha.clone(), a.beta.clone(), vec![bracket])
}

/// `alpha(p).(q.r) = (p.q).beta(r)` on all basis triples, plus commuting
/// twists.
pub fn check_bihom_associative(a: &AssociativeAlgebra) -> AxiomReport {
    let d = a.dim();
    let mut report = AxiomReport::new();
    check_twists_commute(&mut report, "product", &a.alpha, &a.beta);
    report.mark_checked(Axiom::Associativity);
    let alpha_e = columns(&a.alpha);
    let beta_e = columns(&a.beta);
    let m = &a.product;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = m.apply(&alpha_e[i], m.basis_bracket(j, k));
                let rhs = m.apply(m.basis_bracket(i, j), &beta_e[k]);
                report.expect_equal(Axiom::Associativity, "product", &[i, j, k], lhs, rhs);
            }
        }
    }
    report
}

/// Direct sum with block-diagonal twists. Both algebras must carry the same
/// number of brackets; they are summed pairwise.
pub fn direct_sum(a: &BiHomAlgebra, b: &BiHomAlgebra) -> Result<BiHomAlgebra> {
    if a.brackets().len() != b.brackets().len() {
        return Err(Error::Precondition(format!(
            "cannot pair {} brackets with {}",
            a.brackets().len(),
            b.brackets().len()
        )));
    }
    for (label, alg) in [("first", a), ("second", b)] {
        if let Some(v) = check_all_brackets(alg).violations().first() {
            return Err(Error::Precondition(format!(
                "{label} summand fails {} at {:?}",
                v.axiom.name(),
                v.indices
            )));
        }
    }
    let (da, db) = (a.dim(), b.dim());
    let brackets = a
        .brackets()
        .iter()
        .zip(b.brackets())
        .map(|(ba, bb)| {
            BracketTensor::from_fn(da + db, |i, j, k| {
                if i < da && j < da && k < da {
                    ba.coeff(i, j, k).clone()
                } else if i >= da && j >= da && k >= da {
                    bb.coeff(i - da, j - da, k - da).clone()
                } else {
                    Rational::from_integer(0.into())
                }
            })
        })
        .collect();
    BiHomAlgebra::new(a.alpha().block_diag(b.alpha()), a.beta().block_diag(b.beta()), brackets)
}

/// Whether `f: A -> B` intertwines the twists and every paired bracket.
pub fn check_morphism(f: &RationalMatrix, a: &BiHomAlgebra, b: &BiHomAlgebra) -> Result<bool> {
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "morphism must be {}x{}, got {}x{}",
            b.dim(),
            a.dim(),
            f.rows(),
            f.cols()
        )));
    }
    if a.brackets().len() != b.brackets().len() {
        return Err(Error::ShapeMismatch(
            "algebras carry different numbers of brackets".into(),
        ));
    }
    if b.alpha() * f != f * a.alpha() || b.beta() * f != f * a.beta() {
        return Ok(false);
    }
    let mut report = AxiomReport::new();
    for (source, target) in a.brackets().iter().zip(b.brackets()) {
        check_morphism_of_bracket(&mut report, "morphism", f, source, target);
    }
    Ok(report.passed())
}
