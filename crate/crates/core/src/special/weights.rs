//! Closed-form measure weights.
//!
//! Three parameter families admit elementary radial weights, and each solves
//! the moment problem ∫ w(t) t^n dt = [ΠΓ(b)/ΠΓ(a)] ρ(n) for its matching
//! hypergeometric parameter set:
//!
//! | family             | weight                  | support | matching pFq      |
//! |--------------------|-------------------------|---------|-------------------|
//! | Exponential        | e^{-t}                  | [0, ∞)  | 0F0               |
//! | Beta(a)            | (1-t)^{a-1} / Γ(a)      | [0, 1]  | 1F0(a+1)          |
//! | GammaLaguerre(e0)  | e^{-t} t^{e0}           | [0, ∞)  | 1F1(1; e0+1)      |

use crate::error::{Error, Result};
use crate::special::gamma::{gamma, ln_gamma};
use crate::special::pfq::HyperParams;
use crate::special::quad::Support;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFamily {
    Exponential,
    Beta { a: f64 },
    GammaLaguerre { e0: f64 },
}

impl WeightFamily {
    pub fn beta(a: f64) -> Result<Self> {
        if a.is_nan() || a <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "Beta weight requires a > 0, got {a}"
            )));
        }
        Ok(Self::Beta { a })
    }

    pub fn gamma_laguerre(e0: f64) -> Result<Self> {
        if e0.is_nan() || e0 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "GammaLaguerre weight requires e0 >= 0, got {e0}"
            )));
        }
        Ok(Self::GammaLaguerre { e0 })
    }

    /// Integration region, including singular-endpoint metadata for Beta
    /// weights with a < 1.
    pub fn support(&self) -> Support {
        match *self {
            Self::Exponential => Support::HalfLine,
            Self::Beta { a } if a < 1.0 => Support::IntervalSingularRight {
                lo: 0.0,
                hi: 1.0,
                exponent: a,
            },
            Self::Beta { .. } => Support::Interval { lo: 0.0, hi: 1.0 },
            Self::GammaLaguerre { .. } => Support::HalfLine,
        }
    }

    /// True when t lies in the (closed) support, except that the Beta weight
    /// is left open at t = 1 where the a < 1 branch diverges.
    fn contains(&self, t: f64) -> bool {
        match *self {
            Self::Exponential | Self::GammaLaguerre { .. } => t >= 0.0,
            Self::Beta { .. } => (0.0..=1.0).contains(&t),
        }
    }

    /// Weight value w(t); errors outside the support.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || !self.contains(t) {
            return Err(Error::Domain(format!(
                "t = {t} outside the support of {self:?}"
            )));
        }
        Ok(match *self {
            Self::Exponential => (-t).exp(),
            Self::Beta { a } => (1.0 - t).powf(a - 1.0) / gamma(a)?,
            Self::GammaLaguerre { e0 } => {
                if t == 0.0 && e0 == 0.0 {
                    1.0 // 0^0 = 1 by the empty-product convention
                } else {
                    (-t).exp() * t.powf(e0)
                }
            }
        })
    }

    /// The hypergeometric parameter set whose structure constants this weight
    /// reproduces as moments.
    pub fn matching_params(&self) -> HyperParams {
        match *self {
            Self::Exponential => HyperParams::exponential(),
            Self::Beta { a } => {
                HyperParams::new(vec![a + 1.0], vec![]).expect("a + 1 > 1 is always valid")
            }
            Self::GammaLaguerre { e0 } => {
                HyperParams::new(vec![1.0], vec![e0 + 1.0]).expect("e0 + 1 >= 1 is always valid")
            }
        }
    }

    /// Closed form of the n-th moment ∫ w(t) t^n dt = [ΠΓ(b)/ΠΓ(a)] ρ(n).
    pub fn moment(&self, n: usize) -> Result<f64> {
        let nf = n as f64;
        Ok(match *self {
            Self::Exponential => gamma(nf + 1.0)?,
            Self::Beta { a } => (ln_gamma(nf + 1.0)? - ln_gamma(nf + a + 1.0)?).exp(),
            Self::GammaLaguerre { e0 } => gamma(nf + e0 + 1.0)?,
        })
    }
}
