//! Two-diagonal matrices with exactly known integer spectra, built from a
//! special pair of Racah polynomial families, and the finite quantum
//! oscillator model they carry.
//!
//! The crate provides:
//!
//! - [`numerics`]: exact half-integers, the two scalar backends (binary64
//!   floats and arbitrary-precision rationals), Pochhammer symbols and
//!   terminating hypergeometric series;
//! - [`racah`]: Racah polynomials, weights, squared norms, orthonormal
//!   Racah and symmetric Krawtchouk functions;
//! - [`doubles`]: the two-diagonal matrices, their analytic eigenvector
//!   matrices and the `M U = U D` residual checks;
//! - [`spectral`]: an independent Sturm-bisection eigensolver and an exact
//!   characteristic-polynomial certificate;
//! - [`oscillator`]: the finite oscillator model `(H, q, p)` with its
//!   discrete position wavefunctions.
//!
//! Core computations are generic over the scalar backend. Use [`Real`] for
//! ordinary numerics and [`Rational`] wherever an exact certificate is
//! wanted; square roots (orthonormal functions, eigenvectors,
//! wavefunctions) exist on float backends only.

pub mod doubles;
pub mod error;
pub mod numerics;
pub mod oscillator;
pub mod racah;
pub mod spectral;

pub use error::{Error, Result};
pub use numerics::{FloatScalar, HalfInteger, Scalar};

/// Default float backend.
pub type Real = f64;

/// Exact rational backend.
pub type Rational = numerics::Rational;

/// Two-diagonal matrix on the default float backend.
pub type RealMatrix = doubles::TwoDiagonalMatrix<Real>;

/// Two-diagonal matrix on the exact backend.
pub type RationalMatrix = doubles::TwoDiagonalMatrix<Rational>;

/// Eigenvector matrix on the default float backend.
pub type RealEigenvectors = doubles::EigenvectorMatrixU<Real>;

/// Oscillator model on the default float backend.
pub type RealOscillator = oscillator::OscillatorModel<Real>;
