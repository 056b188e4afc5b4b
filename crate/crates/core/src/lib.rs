//! Closed-form spectral analysis of tridiagonal Toeplitz and Toeplitz-type
//! matrices.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`linalg`]: small dense complex kernels (Householder QR, Hessenberg
//!   reduction, shifted QR eigenvalues, inverse iteration, one-sided Jacobi
//!   singular values).
//! * [`toeplitz`]: exact eigenvalues and right/left eigenvectors of
//!   `T = (n; σ, δ, τ)` and of the eight corner-modified variants, plus a
//!   spectral factorization whose inverse eigenbasis is applied analytically.
//! * [`conditioning`]: eigenvalue gaps, eigenvalue and eigenvector condition
//!   numbers, Rayleigh-quotient angle bounds.
//! * [`structured`]: Wilkinson perturbations, projections onto the Toeplitz
//!   structure subspaces, structured condition numbers and pseudospectra.
//! * [`lab`]: Monte-Carlo and finite-difference checks of the perturbation
//!   bounds against dense computation.
//! * [`applications`]: nearest-Toeplitz projection and the refined spectral
//!   factorization of nonsymmetric near-Toeplitz tridiagonal matrices.
//!
//! Eigenvalue indices `h` are 1-based throughout, `1 ≤ h ≤ n`, matching the
//! closed-form formulas `λ_h = δ + 2√(στ)·cos(hπ/(n+1))`.

#![no_std]
// `num_traits::Float` supplies float math here; the per-module imports are
// marked `allow(unused_imports)` because std, when linked by a dependent,
// provides the same methods inherently.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod applications;
pub mod conditioning;
mod error;
pub mod lab;
pub mod linalg;
pub mod matrix;
pub mod structured;
pub mod toeplitz;

pub use error::{Error, Result};
pub use matrix::{DenseMatrix, TridiagonalMatrix};
pub use num_complex::Complex64 as C64;
pub use toeplitz::{SpectralFactorization, ToeplitzTypeCase, TriToeplitz};

/// Crate version, for reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Shorthand for a complex number from its real and imaginary parts.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
