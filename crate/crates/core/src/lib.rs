//! Exact verification of `𝓕_qtz(M_n) = Δ'_{e_{n-1} + z e_{n-2} + ⋯ + z^{n-1}}(e_n)`.
//!
//! The algebra is generic over an exact scalar type (`Ratio<I>`); the
//! aliases below fix it to arbitrary-precision rationals.

pub mod coinvariants;
pub mod combinatorics;
pub mod exactalg;
pub mod frobenius;
pub mod macdonald;
pub mod superring;
pub mod verifier;

pub type Rational = num_rational::BigRational;
pub type QtzPolynomial = exactalg::QtzPoly<Rational>;
pub type QTRationalFunction = exactalg::QtRationalFunction<Rational>;
pub type RationalMatrix = exactalg::SparseMatrix<Rational>;
pub type RationalVector = exactalg::SparseVec<Rational>;
pub type Series = frobenius::FrobeniusSeries<Rational>;
pub type SymmetricFunction = macdonald::SymFunc<Rational>;
pub type SuperPoly = superring::SuperPolynomial<Rational>;
