//! Numerics for generalized hypergeometric coherent states.
//!
//! The crate builds coherent states whose normalization function is a
//! generalized hypergeometric series pFq(a; b; |z|²), realizes the theta
//! operator x·d/dx as a diagonal action on truncated power series, constructs
//! thermal quasi-distributions (Husimi Q and the diagonal P weight) over
//! linear energy spectra, and verifies the integral and product identities
//! tying these pieces together: moment equations for the measure weights,
//! resolution of the identity, Kummer and Laplace integral representations,
//! and the series product formula.
//!
//! Modules:
//! - [`special`]: gamma/Pochhammer/Stirling kernels, pFq evaluation,
//!   convergence radii, measure weights, adaptive Gauss-Kronrod quadrature.
//! - [`series`]: truncated formal power series with Cauchy-product arithmetic.
//! - [`theta`]: diagonal theta-operator actions and the associated
//!   recurrence/ODE/dilation checks.
//! - [`coherent`]: spectra, Fock-basis amplitudes, ladder matrices, overlap
//!   kernels, and completeness checks.
//! - [`thermal`]: partition functions, thermal occupation, Husimi and P
//!   quasi-distributions over linear spectra.
//! - [`identities`]: standalone two-sided verification of the integral and
//!   product identities.
//! - [`report`]: machine-readable pass/fail records for every check.
//! - [`suites`]: the default verification suites driven by the CLI.

pub mod coherent;
pub mod error;
pub mod identities;
pub mod report;
pub mod series;
pub mod special;
pub mod suites;
pub mod thermal;
pub mod theta;

pub use error::{Error, Result};
pub use special::{HyperParams, QuadratureSpec, WeightFamily};
