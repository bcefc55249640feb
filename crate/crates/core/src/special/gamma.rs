//! Gamma and log-gamma on the positive real axis.
//!
//! Lanczos approximation with the coefficient set derived in "An Analysis of
//! the Lanczos Gamma Approximation", G. R. Pugh, 2004, p. 116. Relative error
//! is a few ulps across the whole positive axis, comfortably inside the
//! 1e-13 budget the rest of the crate assumes.

use crate::error::{Error, Result};

/// ln(2 * sqrt(e / pi))
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

/// Auxiliary shift in the Lanczos sum.
const GAMMA_R: f64 = 10.900511;

/// Polynomial coefficients for the Lanczos series A_g(x).
const GAMMA_DK: &[f64] = &[
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];

fn lanczos_sum(x: f64) -> f64 {
    GAMMA_DK
        .iter()
        .enumerate()
        .skip(1)
        .fold(GAMMA_DK[0], |s, (i, c)| s + c / (x + i as f64 - 1.0))
}

/// Natural logarithm of the gamma function, ln Γ(x), for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection through Γ(x)Γ(1-x) = π/sin(πx); for 0 < x < 0.5 the
        // sine factor is positive so the logarithm is well defined.
        let s = lanczos_sum(1.0 - x);
        Ok(std::f64::consts::PI.ln()
            - (std::f64::consts::PI * x).sin().ln()
            - s.ln()
            - LN_2_SQRT_E_OVER_PI
            - (0.5 - x) * ((0.5 - x + GAMMA_R) / std::f64::consts::E).ln())
    } else {
        let s = lanczos_sum(x);
        Ok(s.ln()
            + LN_2_SQRT_E_OVER_PI
            + (x - 0.5) * ((x - 0.5 + GAMMA_R) / std::f64::consts::E).ln())
    }
}

/// Gamma function Γ(x) for x > 0. Overflows to +inf above x ≈ 171.6.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        let s = lanczos_sum(1.0 - x);
        Ok(std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin()
                * s
                * 2.0
                * (std::f64::consts::E / std::f64::consts::PI).sqrt()
                * ((0.5 - x + GAMMA_R) / std::f64::consts::E).powf(0.5 - x)))
    } else {
        let s = lanczos_sum(x);
        Ok(s * 2.0
            * (std::f64::consts::E / std::f64::consts::PI).sqrt()
            * ((x - 0.5 + GAMMA_R) / std::f64::consts::E).powf(x - 0.5))
    }
}
