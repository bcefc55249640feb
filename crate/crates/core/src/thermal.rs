//! Thermal (mixed) states over a spectrum.
//!
//! The density operator is Fock-diagonal with Boltzmann weights
//! e^{-β·e(n)} / Z. For the linear spectrum e(n) = n + e0 the occupation
//! reduces to the geometric law (1-q)·q^n with q = e^{-β}, the Husimi
//! distribution has an elementary closed form, and the diagonal P weight is a
//! pure exponential. The ratio-form Husimi evaluation is exact for every
//! offset; the closed forms are compared against it by probe rather than
//! trusted, because the two differ by a factor q^{e0} at x = 0 when e0 > 0.

use crate::coherent::{MomentCheck, SpectrumModel};
use crate::error::{Error, Result};
use crate::special::{
    gamma, integrate, pfq, pochhammer, CutoffPolicy, HyperParams, QuadratureSpec, Support,
};

/// Hard cap on Boltzmann / Husimi series terms.
const MAX_THERMAL_TERMS: usize = 10_000;

/// A spectrum in contact with a bath at dimensionless inverse temperature β
/// (the product β·ħω is a single knob; ħω is never represented separately).
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalModel {
    beta: f64,
    spectrum: SpectrumModel,
}

impl ThermalModel {
    pub fn new(beta: f64, spectrum: SpectrumModel) -> Result<Self> {
        if beta.is_nan() || beta <= 0.0 || beta.is_infinite() {
            return Err(Error::InvalidParams(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        Ok(Self { beta, spectrum })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn spectrum(&self) -> &SpectrumModel {
        &self.spectrum
    }

    /// q = e^{-β}, the geometric ratio of Boltzmann weights at unit level
    /// spacing. Always in (0, 1).
    pub fn q_factor(&self) -> f64 {
        (-self.beta).exp()
    }

    /// Mean occupation 1/(e^β - 1) of the unit-spacing ladder.
    pub fn nbar(&self) -> f64 {
        1.0 / (self.beta.exp() - 1.0)
    }

    /// The offset e0 when the spectrum is linear.
    pub fn linear_offset(&self) -> Option<f64> {
        match self.spectrum {
            SpectrumModel::Linear { e0 } => Some(e0),
            SpectrumModel::Ghg(_) => None,
        }
    }

    fn require_linear(&self) -> Result<f64> {
        self.linear_offset().ok_or_else(|| {
            Error::ConfigMismatch(format!(
                "operation requires a linear spectrum, got {}",
                self.spectrum.label()
            ))
        })
    }
}

/// Partition function evaluated as a series, with the geometric closed form
/// alongside when the spectrum is linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionValue {
    pub series: f64,
    pub closed_form: Option<f64>,
    pub terms_used: usize,
}

/// Z(β) = Σ_n e^{-β·e(n)}.
///
/// For linear spectra the closed form e^{-β·e0} / (1 - e^{-β}) is computed and
/// must agree with the series to 1e-12 relative. A spectrum whose Boltzmann
/// sum does not converge within the term cap is rejected.
pub fn partition_function(model: &ThermalModel, tol: f64) -> Result<PartitionValue> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let beta = model.beta();
    let mut sum = 0.0;
    let mut small_streak = 0;
    let mut terms_used = 0;
    for n in 0..MAX_THERMAL_TERMS {
        let term = (-beta * model.spectrum().eigen(n)).exp();
        sum += term;
        terms_used = n + 1;
        if term <= tol * sum + f64::MIN_POSITIVE {
            small_streak += 1;
            if small_streak >= 3 {
                break;
            }
        } else {
            small_streak = 0;
        }
        if n + 1 == MAX_THERMAL_TERMS {
            return Err(Error::NonConvergence {
                terms: terms_used,
                last_term: term,
            });
        }
    }

    let closed_form = model
        .linear_offset()
        .map(|e0| (-beta * e0).exp() / (1.0 - (-beta).exp()));
    if let Some(closed) = closed_form {
        let rel = (sum - closed).abs() / closed;
        if rel > 1e-12 {
            return Err(Error::AccuracyNotReached {
                best: sum,
                error_estimate: rel,
            });
        }
    }
    Ok(PartitionValue {
        series: sum,
        closed_form,
        terms_used,
    })
}

/// Diagonal occupation probabilities ρ_nn = e^{-β·e(n)} / Z for n = 0..=order.
///
/// For linear spectra this is (1-q)·q^n independently of e0: the offset factor
/// cancels between the Boltzmann weight and the partition function.
pub fn density_diag(model: &ThermalModel, order: usize) -> Result<Vec<f64>> {
    let z = partition_function(model, 1e-15)?.series;
    let beta = model.beta();
    Ok((0..=order)
        .map(|n| (-beta * model.spectrum().eigen(n)).exp() / z)
        .collect())
}

/// Husimi distribution in ratio form:
/// (1/Z) · Σ_n e^{-β·e(n)} x^n / ρ(n) ÷ pFq(a; b; x).
///
/// This is the Boltzmann-weighted normalization series divided by the
/// normalization function itself, and is exact for every spectrum the
/// parameters match.
pub fn husimi_q_ratio(model: &ThermalModel, params: &HyperParams, x: f64, tol: f64) -> Result<f64> {
    if !model.spectrum().matches_params(params) {
        return Err(Error::ConfigMismatch(format!(
            "parameters do not match spectrum {}",
            model.spectrum().label()
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let radius = params.radius_bound()?;
    if x.abs() >= radius {
        return Err(Error::Divergence {
            x_abs: x.abs(),
            radius,
        });
    }

    let beta = model.beta();
    let spectrum = model.spectrum();
    let mut weighted = 0.0;
    let mut monomial_over_rho = 1.0; // x^n / ρ(n)
    let mut small_streak = 0;
    for n in 0..MAX_THERMAL_TERMS {
        let term = (-beta * spectrum.eigen(n)).exp() * monomial_over_rho;
        weighted += term;
        if term.abs() <= tol * weighted.abs() + f64::MIN_POSITIVE {
            small_streak += 1;
            if small_streak >= 3 {
                break;
            }
        } else {
            small_streak = 0;
        }
        if n + 1 == MAX_THERMAL_TERMS {
            return Err(Error::NonConvergence {
                terms: n + 1,
                last_term: term.abs(),
            });
        }
        monomial_over_rho *= x / spectrum.eigen(n + 1);
    }

    let z = partition_function(model, tol.min(1e-14))?.series;
    let normalization = pfq(params, x, tol)?.value;
    Ok(weighted / (z * normalization))
}

/// Closed-form Husimi distribution for linear spectra:
/// (1/Z) · exp[(q-1)·x], equivalently
/// (1/(n̄+1)) · ((n̄+1)/n̄)^{e0} · exp(-x/(n̄+1)).
///
/// The two printed forms are algebraically identical and are cross-checked to
/// 1e-13 on every call. Exactness against the ratio form holds only at e0 = 0;
/// see [`husimi_consistency_probe`].
pub fn husimi_q_closed_linear(model: &ThermalModel, x: f64) -> Result<f64> {
    let (gaussian_like, deviation) = husimi_closed_forms(model, x)?;
    if deviation > 1e-13 {
        return Err(Error::AccuracyNotReached {
            best: gaussian_like,
            error_estimate: deviation,
        });
    }
    Ok(gaussian_like)
}

/// Relative deviation between the two printed closed forms at x.
pub fn husimi_closed_forms_deviation(model: &ThermalModel, x: f64) -> Result<f64> {
    husimi_closed_forms(model, x).map(|(_, deviation)| deviation)
}

fn husimi_closed_forms(model: &ThermalModel, x: f64) -> Result<(f64, f64)> {
    let e0 = model.require_linear()?;
    let beta = model.beta();
    let q = model.q_factor();
    let z = (-beta * e0).exp() / (1.0 - q);
    let gaussian_like = ((q - 1.0) * x).exp() / z;

    let nbar = model.nbar();
    let occupation_form = ((nbar + 1.0) / nbar).powf(e0) * (-x / (nbar + 1.0)).exp() / (nbar + 1.0);

    let scale = gaussian_like.abs().max(occupation_form.abs()).max(1e-300);
    Ok((
        gaussian_like,
        (gaussian_like - occupation_form).abs() / scale,
    ))
}

/// Measured disagreement between the ratio-form and closed-form Husimi
/// distributions over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HusimiProbe {
    pub max_rel_deviation: f64,
    /// ratio form / closed form at x = 0; analytically q^{e0}.
    pub ratio_at_zero: f64,
}

/// Compare [`husimi_q_ratio`] against [`husimi_q_closed_linear`] pointwise.
///
/// At e0 = 0 the two must agree to 1e-10 and a larger deviation is an error;
/// for e0 > 0 the deviation is measured and reported, never asserted.
pub fn husimi_consistency_probe(model: &ThermalModel, x_grid: &[f64]) -> Result<HusimiProbe> {
    let e0 = model.require_linear()?;
    let params = model.spectrum().equivalent_params();
    let mut max_rel_deviation: f64 = 0.0;
    for &x in x_grid {
        let ratio_form = husimi_q_ratio(model, &params, x, 1e-14)?;
        let closed_form = husimi_q_closed_linear(model, x)?;
        max_rel_deviation =
            max_rel_deviation.max((ratio_form - closed_form).abs() / closed_form.abs());
    }
    let ratio_at_zero =
        husimi_q_ratio(model, &params, 0.0, 1e-14)? / husimi_q_closed_linear(model, 0.0)?;
    if e0 == 0.0 && max_rel_deviation >= 1e-10 {
        return Err(Error::AccuracyNotReached {
            best: ratio_at_zero,
            error_estimate: max_rel_deviation,
        });
    }
    Ok(HusimiProbe {
        max_rel_deviation,
        ratio_at_zero,
    })
}

/// Diagonal quasi-distribution weight for linear spectra:
/// P(x) = (1/n̄) · e^{-x/n̄} = (e^β - 1) · exp[-(e^β - 1)·x].
pub fn p_function_linear(model: &ThermalModel, x: f64) -> Result<f64> {
    model.require_linear()?;
    let nbar = model.nbar();
    Ok((-x / nbar).exp() / nbar)
}

/// Verify the moment equation of the transformed P weight by quadrature:
/// ∫ P̃(t) t^n dt = Γ(e0+1) · ρ(n) · e^{-β·e(n)}, with
/// P̃(t) = e^{-β·e0} · E · e^{-E·t} (E·t)^{e0} and E = e^β.
pub fn p_moment_check(
    model: &ThermalModel,
    n_max: usize,
    spec: &QuadratureSpec,
) -> Result<MomentCheck> {
    let e0 = model.require_linear()?;
    let beta = model.beta();
    let growth = beta.exp(); // E
    let gamma_e0 = gamma(e0 + 1.0)?;

    let p_tilde = |t: f64| {
        let scaled = growth * t;
        let power = if scaled == 0.0 && e0 == 0.0 {
            1.0
        } else {
            scaled.powf(e0)
        };
        (-beta * e0).exp() * growth * (-scaled).exp() * power
    };

    let mut check = MomentCheck {
        max_rel_error: 0.0,
        worst_n: 0,
        lhs_at_worst: 0.0,
        rhs_at_worst: 0.0,
    };
    for n in 0..=n_max {
        let spec_n = spec.with_cutoff(CutoffPolicy::new(growth, e0 + n as f64, beta.exp()));
        let quad = integrate(
            |t| p_tilde(t) * t.powi(n as i32),
            &Support::HalfLine,
            &spec_n,
        )?;
        let rhs = gamma_e0 * pochhammer(e0 + 1.0, n) * (-beta * (n as f64 + e0)).exp();
        let rel = (quad.value - rhs).abs() / rhs.abs();
        if rel > check.max_rel_error {
            check = MomentCheck {
                max_rel_error: rel,
                worst_n: n,
                lhs_at_worst: quad.value,
                rhs_at_worst: rhs,
            };
        }
    }
    Ok(check)
}

/// Reconstruct the diagonal occupation from the P weight and the coherent
/// state measure:
///
///   ρ_nn = ∫ dμ(x) · P(x) · |⟨n|z⟩|²
///        = (1/Γ(e0+1)·ρ(n)) ∫ e^{-x} x^{e0+n} P(x) dx
///
/// (the normalization function in the measure cancels the one in the squared
/// amplitude). P is taken as the complete weight, with no extra 1/Z factor:
/// that reading reproduces ρ_nn = (1-q)·q^n at e0 = 0, which this check
/// arbitrates against [`density_diag`].
pub fn density_reconstruction_check(
    model: &ThermalModel,
    order: usize,
    spec: &QuadratureSpec,
) -> Result<MomentCheck> {
    let e0 = model.require_linear()?;
    if order > 20 {
        return Err(Error::Domain(format!(
            "reconstruction check is bounded at order <= 20, got {order}"
        )));
    }
    let nbar = model.nbar();
    let gamma_e0 = gamma(e0 + 1.0)?;
    let diag = density_diag(model, order)?;

    let mut check = MomentCheck {
        max_rel_error: 0.0,
        worst_n: 0,
        lhs_at_worst: 0.0,
        rhs_at_worst: 0.0,
    };
    for (n, &occupation) in diag.iter().enumerate() {
        let rho_n = pochhammer(e0 + 1.0, n);
        let spec_n = spec.with_cutoff(CutoffPolicy::new(
            1.0 + 1.0 / nbar,
            e0 + n as f64,
            (1.0 / nbar).max(1.0),
        ));
        let quad = integrate(
            |x| {
                let power = if x == 0.0 && e0 + (n as f64) == 0.0 {
                    1.0
                } else {
                    x.powf(e0 + n as f64)
                };
                (-x).exp() * power * (-x / nbar).exp() / (nbar * gamma_e0 * rho_n)
            },
            &Support::HalfLine,
            &spec_n,
        )?;
        let rel = (quad.value - occupation).abs() / occupation.abs();
        if rel > check.max_rel_error {
            check = MomentCheck {
                max_rel_error: rel,
                worst_n: n,
                lhs_at_worst: quad.value,
                rhs_at_worst: occupation,
            };
        }
    }
    Ok(check)
}

/// Trace of the thermal state through phase space: ∫ dμ(x) Q_H(x) must be 1.
/// Uses the ratio-form Husimi distribution, which is exact for every offset.
/// Returns |integral - 1|.
pub fn husimi_normalization_check(model: &ThermalModel, spec: &QuadratureSpec) -> Result<f64> {
    let e0 = model.require_linear()?;
    let q = model.q_factor();
    let params = model.spectrum().equivalent_params();
    let gamma_e0 = gamma(e0 + 1.0)?;
    let z = partition_function(model, 1e-14)?.series;

    let spec_q = spec.with_cutoff(CutoffPolicy::new(1.0 - q, e0, (4.0 / z).max(4.0)));
    let quad = integrate(
        |x| {
            let normalization = match pfq(&params, x, 1e-14) {
                Ok(eval) => eval.value,
                Err(_) => return f64::NAN,
            };
            let husimi = match husimi_q_ratio(model, &params, x, 1e-14) {
                Ok(v) => v,
                Err(_) => return f64::NAN,
            };
            let power = if x == 0.0 && e0 == 0.0 {
                1.0
            } else {
                x.powf(e0)
            };
            (-x).exp() * power * normalization * husimi / gamma_e0
        },
        &Support::HalfLine,
        &spec_q,
    )?;
    Ok((quad.value - 1.0).abs())
}
