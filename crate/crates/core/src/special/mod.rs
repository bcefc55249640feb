//! Scalar special-function kernel: gamma, Pochhammer symbols, Stirling
//! numbers, pFq series evaluation, measure weights, and adaptive quadrature.

mod gamma;
mod pfq;
mod quad;
mod stirling;
mod weights;

pub use gamma::{gamma, ln_gamma};
pub use pfq::{
    convergence_radius, pfq, pfq_complex, pochhammer, pochhammer_recurrence_check,
    pochhammer_recurrence_residual, HyperParams, Radius, SeriesEval, MAX_PARAM_COUNT,
    MAX_PFQ_TERMS,
};
pub use quad::{integrate, CutoffPolicy, Quadrature, QuadratureSpec, Support};
pub use stirling::{stirling2, STIRLING2_MAX_N};
pub use weights::WeightFamily;
