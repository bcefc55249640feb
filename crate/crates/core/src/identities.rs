//! Two-sided verification of integral and product identities.
//!
//! Every check here evaluates an integral (or a brute-force Cauchy product)
//! on one side and an independent series (or closed form) on the other; no
//! identity is tested against itself. Right-hand series arguments are always
//! pre-checked against the convergence radius, so an out-of-radius
//! configuration is rejected as such instead of surfacing as a bogus identity
//! failure.

use crate::error::{Error, Result};
use crate::series::FormalSeries;
use crate::special::{pfq, CutoffPolicy, HyperParams, QuadratureSpec, Support, WeightFamily};
use crate::theta::series_from_pfq;

/// One two-sided comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityOutcome {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_error: f64,
}

impl IdentityOutcome {
    fn new(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            rel_error: (lhs - rhs).abs() / rhs.abs().max(1e-300),
        }
    }
}

/// Envelope for ∫ w(t)·rFs(c; d; C·t) dt on [0, ∞) with a weight decaying
/// like e^{-t}·t^{weight_power}. An r = s inner series grows like e^{C·t};
/// r < s is sub-exponential and e^{t/2} dominates it once the constant is
/// absorbed into the scale.
fn half_line_envelope(weight_power: f64, inner: &HyperParams, big_c: f64) -> CutoffPolicy {
    if inner.p() == inner.q() {
        CutoffPolicy::new(
            1.0 - big_c.max(0.0),
            weight_power,
            (2.0 + big_c.abs()).exp(),
        )
    } else {
        CutoffPolicy::new(0.5, weight_power + 1.0, (2.0 * big_c.abs() + 2.0).exp())
    }
}

/// ∫_0^∞ e^{-t} 0F1(; 1; c·t) dt = e^c.
pub fn ho1d_integral_check(c: f64, spec: &QuadratureSpec) -> Result<IdentityOutcome> {
    if c.is_nan() || c < 0.0 {
        return Err(Error::Domain(format!(
            "ho1d integral check requires c >= 0, got {c}"
        )));
    }
    let inner = HyperParams::new(vec![], vec![1.0])?;
    let spec_c = spec.with_cutoff(half_line_envelope(0.0, &inner, c));
    let quad = crate::special::integrate(
        |t| match pfq(&inner, c * t, 1e-14) {
            Ok(eval) => (-t).exp() * eval.value,
            Err(_) => f64::NAN,
        },
        &Support::HalfLine,
        &spec_c,
    )?;
    Ok(IdentityOutcome::new(quad.value, c.exp()))
}

/// ∫ w(t) · rFs(c; d; C·t) dt = [ΠΓ(b)/ΠΓ(a)] · F(1, b, c; a, d; C), where
/// (a, b) are the weight family's matching parameters.
pub fn general_integral_check(
    family: &WeightFamily,
    inner: &HyperParams,
    big_c: f64,
    spec: &QuadratureSpec,
) -> Result<IdentityOutcome> {
    let family_params = family.matching_params();
    let mut upper = vec![1.0];
    upper.extend_from_slice(family_params.lower());
    upper.extend_from_slice(inner.upper());
    let mut lower = family_params.upper().to_vec();
    lower.extend_from_slice(inner.lower());
    let combined = HyperParams::new(upper, lower)?;

    // Convergence guard: the right side must sit inside its radius.
    let rhs_eval = pfq(&combined, big_c, 1e-14)?;
    let rhs = family_params.gamma_prefactor()? * rhs_eval.value;

    let support = family.support();
    let spec_c = match family {
        WeightFamily::GammaLaguerre { e0 } => {
            spec.with_cutoff(half_line_envelope(*e0, inner, big_c))
        }
        WeightFamily::Exponential => spec.with_cutoff(half_line_envelope(0.0, inner, big_c)),
        WeightFamily::Beta { .. } => *spec,
    };
    let quad = crate::special::integrate(
        |t| match (family.eval(t), pfq(inner, big_c * t, 1e-14)) {
            (Ok(w), Ok(eval)) => w * eval.value,
            _ => f64::NAN,
        },
        &support,
        &spec_c,
    )?;
    Ok(IdentityOutcome::new(quad.value, rhs))
}

/// Corrected and literal forms of the Kummer integral representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerCheck {
    /// 1F1(1; a+1; C) = a·∫_0^1 e^{Ct}(1-t)^{a-1} dt.
    pub corrected: IdentityOutcome,
    /// The same comparison without the factor a; coincides with the corrected
    /// form only at a = 1.
    pub literal: IdentityOutcome,
}

/// Verify the integral representation of the confluent series 1F1(1; a+1; C).
///
/// The corrected form carries the prefactor a; the factor-free variant is
/// evaluated alongside so its residual can be recorded rather than asserted.
pub fn kummer_integral_check(a: f64, big_c: f64, spec: &QuadratureSpec) -> Result<KummerCheck> {
    if a.is_nan() || a <= 0.0 {
        return Err(Error::Domain(format!(
            "kummer check requires a > 0, got {a}"
        )));
    }
    let rhs = pfq(&HyperParams::new(vec![1.0], vec![a + 1.0])?, big_c, 1e-14)?.value;
    let support = if a < 1.0 {
        Support::IntervalSingularRight {
            lo: 0.0,
            hi: 1.0,
            exponent: a,
        }
    } else {
        Support::Interval { lo: 0.0, hi: 1.0 }
    };
    let quad = crate::special::integrate(
        |t| (big_c * t).exp() * (1.0 - t).powf(a - 1.0),
        &support,
        spec,
    )?;
    Ok(KummerCheck {
        corrected: IdentityOutcome::new(a * quad.value, rhs),
        literal: IdentityOutcome::new(quad.value, rhs),
    })
}

/// ∫_0^∞ e^{-St} rFs(c; d; t) dt = (1/S) · F(1, c; d; 1/S).
pub fn laplace_transform_check(
    inner: &HyperParams,
    s_value: f64,
    spec: &QuadratureSpec,
) -> Result<IdentityOutcome> {
    if inner.p() > inner.q() {
        return Err(Error::InvalidParams(
            "laplace transform requires r <= s so the integrand is sub-exponential".into(),
        ));
    }
    if s_value.is_nan() || s_value <= 0.0 {
        return Err(Error::Domain(format!(
            "laplace variable must be positive, got {s_value}"
        )));
    }
    let mut upper = vec![1.0];
    upper.extend_from_slice(inner.upper());
    let combined = HyperParams::new(upper, inner.lower().to_vec())?;
    // Radius guard: for r = s the transformed series has radius 1, so S > 1.
    let rhs = pfq(&combined, 1.0 / s_value, 1e-14)?.value / s_value;

    let cutoff = if inner.p() == inner.q() {
        CutoffPolicy::new(s_value - 1.0, 1.0, (2.0f64).exp())
    } else {
        CutoffPolicy::new(0.5 * s_value, 1.0, (2.0 / s_value + 2.0).exp())
    };
    let quad = crate::special::integrate(
        |t| match pfq(inner, t, 1e-14) {
            Ok(eval) => (-s_value * t).exp() * eval.value,
            Err(_) => f64::NAN,
        },
        &Support::HalfLine,
        &spec.with_cutoff(cutoff),
    )?;
    Ok(IdentityOutcome::new(quad.value, rhs))
}

/// Result of the coefficient-by-coefficient product-formula comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCheck {
    /// Worst relative coefficient error over the compared indices, measured
    /// against the absolute Cauchy mass so cancelling coefficients are judged
    /// fairly.
    pub max_rel_error: f64,
    /// Number of coefficients compared.
    pub compared: usize,
    /// Indices whose inner terminating sum hit a vanishing lower-parameter
    /// factor before termination; skipped, not computed.
    pub degenerate: Vec<usize>,
}

/// Compare the Cauchy product pFq(a; b; x) · rFs(c; d; g·x) against the
/// series whose m-th coefficient is
///
///   [Π(a_i)_m / Π(b_j)_m] · F(-m, 1-m-b, c; 1-m-a, d; (-1)^{p+q+1} g) / m!
///
/// with each inner F a terminating sum of m+1 terms evaluated by explicit
/// Pochhammer products (never gamma ratios: the shifted parameters are
/// negative).
pub fn product_formula_check(
    left: &HyperParams,
    right: &HyperParams,
    g: f64,
    order: usize,
) -> Result<ProductCheck> {
    if order > 20 {
        return Err(Error::Domain(format!(
            "product formula check is bounded at order <= 20, got {order}"
        )));
    }
    let left_series = series_from_pfq(left, order)?;
    let right_series = series_from_pfq(right, order)?.scale_argument(g);
    let brute = left_series.cauchy_product(&right_series);

    // Absolute Cauchy mass per coefficient, as the comparison scale.
    let abs_left = FormalSeries::new(left_series.coeffs().iter().map(|c| c.abs()).collect())?;
    let abs_right = FormalSeries::new(right_series.coeffs().iter().map(|c| c.abs()).collect())?;
    let mass = abs_left.cauchy_product(&abs_right);

    let argument = if (left.p() + left.q() + 1).is_multiple_of(2) {
        g
    } else {
        -g
    };
    let mut check = ProductCheck {
        max_rel_error: 0.0,
        compared: 0,
        degenerate: Vec::new(),
    };
    for m in 0..=order {
        let mut upper = vec![-(m as f64)];
        upper.extend(left.lower().iter().map(|bj| 1.0 - m as f64 - bj));
        upper.extend_from_slice(right.upper());
        let mut lower: Vec<f64> = left.upper().iter().map(|ai| 1.0 - m as f64 - ai).collect();
        lower.extend_from_slice(right.lower());

        let mut inner_sum = 1.0;
        let mut term = 1.0;
        let mut degenerate = false;
        for k in 0..m {
            let kf = k as f64;
            if lower.iter().any(|l| l + kf == 0.0) {
                degenerate = true;
                break;
            }
            let num: f64 = upper.iter().map(|u| u + kf).product();
            let den: f64 = lower.iter().map(|l| l + kf).product();
            term *= num / den * argument / (kf + 1.0);
            inner_sum += term;
        }
        if degenerate {
            check.degenerate.push(m);
            continue;
        }
        // left_series.coeff(m) is Π(a)_m / (Π(b)_m · m!) already.
        let formula = left_series.coeff(m) * inner_sum;
        let scale = mass.coeff(m).max(1e-300);
        let rel = (brute.coeff(m) - formula).abs() / scale;
        check.max_rel_error = check.max_rel_error.max(rel);
        check.compared += 1;
    }
    Ok(check)
}

/// Pointwise comparison of the confluent product chain for linear spectra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct A2Check {
    pub max_rel_deviation: f64,
    /// lhs/rhs at x = 0; analytically q^{-e0}, and 1 only at e0 = 0.
    pub ratio_at_zero: f64,
}

/// Evaluate both sides of
///   1F1(1; e0+1; x) · e^{(q-1)x}  vs  e^{-β·e0} · 1F1(1; e0+1; q·x)
/// over a grid, with q = e^{-β}. Equality is asserted (to 1e-10) only for
/// e0 = 0; for e0 > 0 the deviation and the x = 0 ratio are reported.
pub fn a2_chain_check(e0: f64, beta: f64, x_grid: &[f64]) -> Result<A2Check> {
    if e0.is_nan() || beta.is_nan() || e0 < 0.0 || beta <= 0.0 {
        return Err(Error::Domain(format!(
            "need e0 >= 0 and beta > 0, got e0={e0}, beta={beta}"
        )));
    }
    let params = HyperParams::new(vec![1.0], vec![e0 + 1.0])?;
    let q = (-beta).exp();
    let eval_sides = |x: f64| -> Result<(f64, f64)> {
        let lhs = pfq(&params, x, 1e-14)?.value * ((q - 1.0) * x).exp();
        let rhs = (-beta * e0).exp() * pfq(&params, q * x, 1e-14)?.value;
        Ok((lhs, rhs))
    };
    let mut max_rel_deviation: f64 = 0.0;
    for &x in x_grid {
        let (lhs, rhs) = eval_sides(x)?;
        max_rel_deviation = max_rel_deviation.max((lhs - rhs).abs() / rhs.abs());
    }
    let (lhs0, rhs0) = eval_sides(0.0)?;
    let ratio_at_zero = lhs0 / rhs0;
    if e0 == 0.0 && max_rel_deviation >= 1e-10 {
        return Err(Error::AccuracyNotReached {
            best: ratio_at_zero,
            error_estimate: max_rel_deviation,
        });
    }
    Ok(A2Check {
        max_rel_deviation,
        ratio_at_zero,
    })
}

/// Cross-check the two labelings of the angular-integral kernel for the
/// linear family: the direct sum Σ x^n/ρ(n)² against 1F2(1; e0+1, e0+1; x).
/// The two are the same series term by term; any systematic mismatch would be
/// reported by the caller, not resolved here.
pub fn angular_kernel_cross_check(e0: f64, x_grid: &[f64]) -> Result<f64> {
    if e0.is_nan() || e0 < 0.0 {
        return Err(Error::Domain(format!("need e0 >= 0, got {e0}")));
    }
    let labeled = HyperParams::new(vec![1.0], vec![e0 + 1.0, e0 + 1.0])?;
    let mut worst: f64 = 0.0;
    for &x in x_grid {
        let mut direct = 0.0f64;
        let mut term = 1.0f64; // x^n / ρ(n)², with ρ(n+1)/ρ(n) = n+1+e0
        let mut n = 0usize;
        loop {
            direct += term;
            if term.abs() <= 1e-17 * direct.abs() || n > 4000 {
                break;
            }
            let level = n as f64 + 1.0 + e0;
            term *= x / (level * level);
            n += 1;
        }
        let via_pfq = pfq(&labeled, x, 1e-15)?.value;
        worst = worst.max((direct - via_pfq).abs() / via_pfq.abs());
    }
    Ok(worst)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen oracle references keep their full digits
mod tests {
    use super::*;

    const E: f64 = std::f64::consts::E;
    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn ho1d_integral_values() {
        let spec = QuadratureSpec::default();
        let at_zero = ho1d_integral_check(0.0, &spec).unwrap();
        assert!((at_zero.lhs - 1.0).abs() < 1e-10);
        for c in [0.5, 1.0, 2.0, 3.0] {
            let out = ho1d_integral_check(c, &spec).unwrap();
            assert!(out.rel_error < 1e-8, "c={c}: {out:?}");
        }
        assert!(ho1d_integral_check(-1.0, &spec).is_err());
    }

    #[test]
    fn general_integral_exponential_cases() {
        let spec = QuadratureSpec::default();
        // Exponential weight with e^{C t} inner: geometric value 1/(1-C).
        let out = general_integral_check(
            &WeightFamily::Exponential,
            &HyperParams::exponential(),
            0.5,
            &spec,
        )
        .unwrap();
        assert!((out.lhs - 2.0).abs() < 1e-8);
        assert!((out.rhs - 2.0).abs() < 1e-12);
        assert!(out.rel_error < 1e-7);

        // Inner 0F1(;1;Ct) reproduces the exponential integral at C = 0.5.
        let inner = HyperParams::new(vec![], vec![1.0]).unwrap();
        let out = general_integral_check(&WeightFamily::Exponential, &inner, 0.5, &spec).unwrap();
        assert!((out.rhs - 0.5f64.exp()).abs() < 1e-12);
        assert!(out.rel_error < 1e-7);
    }

    #[test]
    fn general_integral_beta_and_laguerre_cases() {
        let spec = QuadratureSpec::default();
        let beta1 = WeightFamily::beta(1.0).unwrap();
        let out = general_integral_check(&beta1, &HyperParams::exponential(), 1.0, &spec).unwrap();
        assert!((out.rhs - (E - 1.0)).abs() < 1e-12);
        assert!(out.rel_error < 1e-7);

        let laguerre = WeightFamily::gamma_laguerre(1.0).unwrap();
        let out =
            general_integral_check(&laguerre, &HyperParams::exponential(), 0.5, &spec).unwrap();
        // Γ(2)·1F0(2;;1/2) = 4 analytically.
        assert!((out.rhs - 4.0).abs() < 1e-10);
        assert!(out.rel_error < 1e-7);
    }

    #[test]
    fn general_integral_rejects_divergent_rhs() {
        let spec = QuadratureSpec::default();
        let result = general_integral_check(
            &WeightFamily::Exponential,
            &HyperParams::exponential(),
            1.5,
            &spec,
        );
        assert!(matches!(result, Err(Error::Divergence { .. })));
    }

    #[test]
    fn kummer_representation() {
        let spec = QuadratureSpec::default();
        // a = 1: corrected and literal coincide at e - 1.
        let check = kummer_integral_check(1.0, 1.0, &spec).unwrap();
        assert!((check.corrected.rhs - (E - 1.0)).abs() < 1e-12);
        assert!(check.corrected.rel_error < 1e-8);
        assert!(check.literal.rel_error < 1e-8);

        // a = 2: frozen reference 2(e-2) = 1F1(1;3;1).
        let check = kummer_integral_check(2.0, 1.0, &spec).unwrap();
        assert!((check.corrected.rhs - 1.4365636569180904707).abs() < 1e-12);
        assert!(check.corrected.rel_error < 1e-8);
        assert!((check.literal.rel_error - 0.5).abs() < 1e-6);

        // C = 0 reduces to a·∫(1-t)^{a-1} = 1.
        let check = kummer_integral_check(2.0, 0.0, &spec).unwrap();
        assert!((check.corrected.lhs - 1.0).abs() < 1e-10);

        // Singular endpoint at a = 0.5.
        let check = kummer_integral_check(0.5, 2.0, &spec).unwrap();
        assert!(check.corrected.rel_error < 1e-8, "{check:?}");

        assert!(kummer_integral_check(0.0, 1.0, &spec).is_err());
    }

    #[test]
    fn laplace_transform_values() {
        let spec = QuadratureSpec::default();
        let out = laplace_transform_check(&HyperParams::exponential(), 2.0, &spec).unwrap();
        assert!((out.lhs - 1.0).abs() < 1e-9);
        assert!((out.rhs - 1.0).abs() < 1e-13);

        let bessel_like = HyperParams::new(vec![], vec![1.0]).unwrap();
        let out = laplace_transform_check(&bessel_like, 1.0, &spec).unwrap();
        assert!((out.rhs - E).abs() < 1e-12);
        assert!(out.rel_error < 1e-7);

        let inner = HyperParams::new(vec![], vec![2.0]).unwrap();
        let out = laplace_transform_check(&inner, 2.0, &spec).unwrap();
        assert!((out.rhs - 0.64872127070012814685).abs() < 1e-13);
        assert!(out.rel_error < 1e-7);
    }

    #[test]
    fn laplace_transform_large_s_limit() {
        // At S = 1000 the transform of 0F1(;2;t) is within 1e-3 of 1/S (the
        // first-order correction is 1/(2S)).
        let spec = QuadratureSpec::default();
        let inner = HyperParams::new(vec![], vec![2.0]).unwrap();
        let out = laplace_transform_check(&inner, 1000.0, &spec).unwrap();
        assert!((out.lhs - 1e-3).abs() / 1e-3 < 1e-3);
    }

    #[test]
    fn laplace_transform_preconditions() {
        let spec = QuadratureSpec::default();
        let super_exponential = HyperParams::new(vec![2.0], vec![]).unwrap();
        assert!(matches!(
            laplace_transform_check(&super_exponential, 2.0, &spec),
            Err(Error::InvalidParams(_))
        ));
        // r = s with S <= 1: the transformed series sits outside its radius.
        assert!(matches!(
            laplace_transform_check(&HyperParams::exponential(), 0.9, &spec),
            Err(Error::Divergence { .. })
        ));
    }

    #[test]
    fn product_formula_exponential_cases() {
        let exp = HyperParams::exponential();
        // e^x · e^x = e^{2x}: coefficient of x^2 is 2 on both routes.
        let brute = series_from_pfq(&exp, 4)
            .unwrap()
            .cauchy_product(&series_from_pfq(&exp, 4).unwrap());
        assert!((brute.coeff(2) - 2.0).abs() < 1e-15);
        let check = product_formula_check(&exp, &exp, 1.0, 12).unwrap();
        assert!(check.max_rel_error < 1e-12, "{check:?}");
        assert!(check.degenerate.is_empty());
        assert_eq!(check.compared, 13);

        // e^x · e^{-x} = 1: every higher coefficient cancels.
        let check = product_formula_check(&exp, &exp, -1.0, 12).unwrap();
        assert!(check.max_rel_error < 1e-12, "{check:?}");
    }

    #[test]
    fn product_formula_confluent_case() {
        let left = HyperParams::new(vec![1.0], vec![2.0]).unwrap();
        let right = HyperParams::exponential();
        let check = product_formula_check(&left, &right, 0.5, 12).unwrap();
        assert!(check.max_rel_error < 1e-10, "{check:?}");
        assert!(check.degenerate.is_empty());
    }

    #[test]
    fn product_formula_zero_scale_reduces_to_left() {
        let left = HyperParams::new(vec![0.5], vec![]).unwrap();
        let right = HyperParams::new(vec![], vec![1.5]).unwrap();
        let check = product_formula_check(&left, &right, 0.0, 10).unwrap();
        assert!(check.max_rel_error < 1e-14, "{check:?}");
    }

    #[test]
    fn product_formula_flags_degenerate_parameters() {
        // Upper parameter 0 makes the shifted lower parameter 1-m hit zero for
        // every m >= 1.
        let left = HyperParams::new(vec![0.0], vec![2.0]).unwrap();
        let right = HyperParams::exponential();
        let check = product_formula_check(&left, &right, 0.5, 6).unwrap();
        assert_eq!(check.compared, 1);
        assert_eq!(check.degenerate, vec![1, 2, 3, 4, 5, 6]);
        assert!(check.max_rel_error < 1e-14);
    }

    #[test]
    fn a2_chain_values() {
        let grid: Vec<f64> = (0..=10).map(|i| i as f64).collect();
        let check = a2_chain_check(0.0, LN2, &grid).unwrap();
        assert!(check.max_rel_deviation < 1e-10, "{check:?}");
        assert!((check.ratio_at_zero - 1.0).abs() < 1e-12);

        let check = a2_chain_check(0.0, 1.0, &[3.0]).unwrap();
        assert!(check.max_rel_deviation < 1e-10);

        // e0 = 2: ratio at 0 is q^{-e0} = 4.
        let check = a2_chain_check(2.0, LN2, &[0.0, 1.0]).unwrap();
        assert!((check.ratio_at_zero - 4.0).abs() < 1e-10, "{check:?}");
    }

    #[test]
    fn angular_kernel_forms_agree() {
        let grid = [0.25, 0.5, 1.0, 2.0];
        for e0 in [1.0, 2.0] {
            let worst = angular_kernel_cross_check(e0, &grid).unwrap();
            assert!(worst < 1e-12, "e0={e0}: {worst}");
        }
    }
}
