//! Exact arithmetic: scalars, polynomials in `q, t, z`, rational functions,
//! and sparse linear algebra.

mod matrix;
mod poly;
mod ratfun;
mod scalar;

pub use matrix::{restricted_trace, rref, EchelonBuilder, ReducedEchelon, Rref, SparseMatrix, SparseVec};
pub use poly::{Exponent, QtzPoly};
pub use ratfun::QtRationalFunction;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("basis columns are not independent")]
    NotFullRank,
    #[error("operator does not preserve the subspace")]
    Inconsistent,
}
