//! Klein-Gordon oscillator under linear-fractional deformed Casimir invariants.
//!
//! In (1+1) dimensions with signature diag(-1,+1), a constant covector `a_mu`
//! deforms the mass shell into `(E^2 - p^2)/(1 + a.p/E_p) = m^2`. The causal
//! class of `a_mu` (timelike, spacelike, lightlike) selects which momentum
//! component enters the denominator, and the oscillator substitution
//! `p^2 -> (p + i m w x)(p - i m w x)` turns each deformed invariant into an
//! exactly solvable bound-state problem. The Magueijo-Smolin (squared
//! denominator) invariant is carried along for comparison.
//!
//! The crate provides:
//!
//! - [`kinematics`]: the nonlinear momentum map, deformed mass-shell residuals
//!   and physical-domain checks for the free particle;
//! - [`spectra`]: exact closed-form energy branches, branch diagnostics,
//!   admissibility limits and shift tables for all five geometries;
//! - [`special_functions`]: Hermite polynomials at complex argument,
//!   normalized oscillator eigenfunctions, complex-shifted eigenfunctions and
//!   Gauss-Hermite quadrature;
//! - [`operators`]: truncated number-basis matrices (ladder, position,
//!   momentum, deformed Hamiltonians), the non-unitary similarity map, the
//!   metric operator and pseudo-Hermiticity diagnostics;
//! - [`verification`]: deterministic oracle suites binding the closed forms to
//!   independent numerics (matrix diagonalization, quadrature, finite
//!   differences).
//!
//! Everything in the numerical core works in units where the mass is 1; the
//! physics is parametrized by the dimensionless pair `(Omega, eps)` =
//! (omega/m, m/E_p), see [`ModelParams`].

pub mod error;
pub mod kinematics;
pub mod operators;
pub mod special_functions;
pub mod spectra;
pub mod verification;

pub use error::Error;
pub use kinematics::{CausalClass, Covector, GeometryKind, ModelParams, TwoMomentum};
pub use num_complex::Complex64;
pub use spectra::BranchPair;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
