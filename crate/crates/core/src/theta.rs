//! The theta operator x·d/dx as a diagonal action on formal series.
//!
//! On the monomial basis the operator is diagonal, (x d/dx) x^n = n x^n, so
//! any function f of it acts coefficient-wise: f applied to Σ c_n x^n gives
//! Σ f(n) c_n x^n. Representing the action this way makes the operator
//! identities exact by construction, and reduces their verification to
//! evaluation equalities (dilation) or coefficient equalities (recurrence and
//! the hypergeometric differential equation).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::series::FormalSeries;
use crate::special::{stirling2, HyperParams};

/// Maximum truncation order accepted when expanding a pFq series.
pub const MAX_SERIES_ORDER: usize = 1000;

/// A rule n -> f(n) with a display label, applied diagonally to series.
#[derive(Clone)]
pub struct SpectrumFunction {
    label: String,
    rule: Arc<dyn Fn(usize) -> f64 + Send + Sync>,
}

impl SpectrumFunction {
    pub fn new(
        label: impl Into<String>,
        rule: impl Fn(usize) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn eval(&self, n: usize) -> f64 {
        (self.rule)(n)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl std::fmt::Debug for SpectrumFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectrumFunction")
            .field("label", &self.label)
            .finish()
    }
}

/// Coefficients of pFq(a; b; x) up to x^order: coeffs[n] = 1/ρ(n).
pub fn series_from_pfq(params: &HyperParams, order: usize) -> Result<FormalSeries> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::Domain(format!(
            "series order {order} exceeds the {MAX_SERIES_ORDER} cap"
        )));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = 1.0;
    coeffs.push(c);
    for n in 1..=order {
        c *= params.term_ratio(n as f64 - 1.0) / n as f64;
        coeffs.push(c);
    }
    FormalSeries::new(coeffs)
}

/// (x d/dx)^power applied coefficient-wise: coeffs[n] -> n^power · coeffs[n],
/// with 0^0 = 1.
pub fn theta_apply(series: &FormalSeries, power: u32) -> FormalSeries {
    func_of_theta_apply(
        &SpectrumFunction::new(format!("n^{power}"), move |n| (n as f64).powi(power as i32)),
        series,
    )
    .expect("integer powers are finite")
}

/// f(x d/dx) applied coefficient-wise: coeffs[n] -> f(n) · coeffs[n].
pub fn func_of_theta_apply(f: &SpectrumFunction, series: &FormalSeries) -> Result<FormalSeries> {
    series.map_indexed(|n| f.eval(n))
}

/// |[e^{γ·theta} s](x0) - s(e^γ·x0)|: the dilation property of the
/// exponentiated operator. Both evaluations must sit inside the series'
/// reliable region.
pub fn dilation_check(series: &FormalSeries, gamma: f64, x0: f64) -> Result<f64> {
    let scaling = SpectrumFunction::new(format!("exp({gamma}·n)"), move |n| {
        (gamma * n as f64).exp()
    });
    let lhs = func_of_theta_apply(&scaling, series)?.eval_checked(x0)?;
    let rhs = series.eval_checked(gamma.exp() * x0)?;
    Ok((lhs - rhs).abs())
}

/// Residual of the Stirling-number expansion of (x d/dx)^n on an exact
/// polynomial at x0:
///
///   (x d/dx)^n p(x0)  vs  Σ_k S(n,k) · x0^k · p^{(k)}(x0)
pub fn stirling_expansion_check(n: usize, poly: &FormalSeries, x0: f64) -> Result<f64> {
    if n > 15 {
        return Err(Error::Domain(format!(
            "stirling expansion check is bounded at n <= 15, got {n}"
        )));
    }
    let lhs = theta_apply(poly, n as u32).eval(x0);
    let mut rhs = 0.0;
    for k in 0..=n {
        let s = stirling2(n, k)? as f64;
        rhs += s * x0.powi(k as i32) * poly.derivative_at(k, x0);
    }
    Ok((lhs - rhs).abs())
}

/// Max relative residual of the coefficient recurrence
/// n·c_n = [Π(a_i+n-1)/Π(b_j+n-1)]·c_{n-1} for the pFq coefficients
/// c_n = 1/ρ(n), n = 1..=order.
pub fn theta_recurrence_check(params: &HyperParams, order: usize) -> Result<f64> {
    if order < 2 {
        return Err(Error::Domain("recurrence check needs order >= 2".into()));
    }
    let series = series_from_pfq(params, order)?;
    let mut worst: f64 = 0.0;
    for n in 1..=order {
        let lhs = n as f64 * series.coeff(n);
        let rhs = params.term_ratio(n as f64 - 1.0) * series.coeff(n - 1);
        let scale = lhs.abs().max(rhs.abs()).max(1e-300);
        worst = worst.max((lhs - rhs).abs() / scale);
    }
    Ok(worst)
}

/// Max absolute residual coefficient of [θ·B(θ) - x·A(θ)] applied to the pFq
/// series, where A(θ) = Π(a_i + θ - 1) and B(θ) = Π(b_j + θ - 1) act
/// diagonally and x· shifts coefficients up one index.
///
/// The shift drops the top coefficient, so residuals are asserted for
/// n <= order - 1 only.
pub fn hypergeometric_ode_residual(params: &HyperParams, order: usize) -> Result<f64> {
    if order < 2 {
        return Err(Error::Domain("ODE residual check needs order >= 2".into()));
    }
    let series = series_from_pfq(params, order)?;

    let b_params: Vec<f64> = params.lower().to_vec();
    let theta_b = SpectrumFunction::new("n·B(n)", move |n| {
        let nf = n as f64;
        nf * b_params.iter().map(|bj| bj + nf - 1.0).product::<f64>()
    });
    let lhs = func_of_theta_apply(&theta_b, &series)?;

    let a_params: Vec<f64> = params.upper().to_vec();
    let factor_a = SpectrumFunction::new("A(n)", move |n| {
        let nf = n as f64;
        a_params.iter().map(|ai| ai + nf - 1.0).product::<f64>()
    });
    let rhs = func_of_theta_apply(&factor_a, &series.shift_up())?;

    let residual = lhs.add(&rhs.scale(-1.0));
    let worst = residual.coeffs()[..order]
        .iter()
        .fold(0.0f64, |acc, &r| acc.max(r.abs()));
    Ok(worst)
}
