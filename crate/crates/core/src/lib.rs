//! Exact computations for BiHom-Lie algebras given by structure constants:
//! axiom checks, representations, cochain complexes, the
//! Nijenhuis–Richardson bracket, and compatible structures.
//!
//! All arithmetic is over [`qlinalg::Rational`], so every verdict is exact.

pub mod algebra;
pub mod cochains;
pub mod compatible;
pub mod corpus;
pub mod error;
pub mod qlinalg;

pub use algebra::{
    check_all_brackets, check_bihom_lie, check_multiplicative, check_representation, direct_sum, semidirect_product,
    yau_twist, AxiomReport, BiHomAlgebra, BracketTensor, Representation,
};
pub use cochains::Cochain;
pub use error::{Error, Result};
pub use qlinalg::{Rational, RationalMatrix};
