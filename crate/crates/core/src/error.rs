use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{what} index {index} out of range (have {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("{0} is not invertible")]
    NotInvertible(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("bracket is not skew-symmetric, so it is not an element of the cochain space")]
    NotSkew,

    #[error("cochain does not intertwine the twist maps: {0}")]
    NotInCochainSpace(String),

    #[error("degree-0 cochains are not part of the shifted graded Lie algebra")]
    DegreeZeroOperand,

    #[error("coboundary does not square to zero at degree {degree}")]
    NotAComplex { degree: usize },
}
