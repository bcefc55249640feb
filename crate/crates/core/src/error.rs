//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by series evaluation, quadrature, and state construction.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the domain of the function (e.g. `ln_gamma(x)` with x <= 0,
    /// a weight evaluated outside its support, or Stirling indices with k > n).
    #[error("domain error: {0}")]
    Domain(String),

    /// Exact-integer computation would exceed the guarded bound.
    #[error("overflow guard: {0}")]
    OverflowGuard(String),

    /// Hypergeometric parameter vectors violate an invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Series argument lies on or outside the convergence disk.
    #[error("series diverges: |x| = {x_abs} with radius {radius}")]
    Divergence { x_abs: f64, radius: f64 },

    /// The term cap was reached before the stopping rule was satisfied.
    #[error("series did not converge within {terms} terms (last term magnitude {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },

    /// Upper parameter count exceeds lower count by more than one: the series
    /// has zero convergence radius.
    #[error("zero convergence radius: p = {p} exceeds q + 1 = {q_plus_one}")]
    ZeroRadius { p: usize, q_plus_one: usize },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature accuracy not reached: best estimate {best} with error {error_estimate:e}")]
    AccuracyNotReached { best: f64, error_estimate: f64 },

    /// A spectrum eigenvalue e(m) was non-positive where positivity is required.
    #[error("spectrum error: e({m}) = {value} is not positive")]
    Spectrum { m: usize, value: f64 },

    /// A weight family was paired with a spectrum or parameter set it does not match.
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),

    /// Truncated-series evaluation requested outside the region where the
    /// truncation tail is negligible.
    #[error("evaluation outside reliable region: tail proxy {tail_proxy:e} at x = {x}")]
    UnreliableEvaluation { x: f64, tail_proxy: f64 },

    /// A spectrum function produced a non-finite value.
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
