//! Adaptive Gauss-Kronrod quadrature.
//!
//! A 7/15-point Gauss-Kronrod pair drives globally adaptive bisection.
//! Semi-infinite integrals are truncated at a point where a caller-supplied
//! decay envelope falls two orders of magnitude below the absolute tolerance;
//! integrable right-endpoint singularities of the form (hi-t)^{a-1} are
//! handled by the change of variable u = (hi-t)^a on the last subinterval.

use crate::error::{Error, Result};

/// Abscissae of the 15-point Kronrod rule on [-1, 1] (positive half).
/// Odd-indexed entries are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

/// Kronrod weights matching [`XGK`].
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

/// Weights of the embedded 7-point Gauss rule.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Truncation rule for [0, ∞) integrals: the integrand is assumed bounded by
/// `scale · e^{-decay·t} · t^power`, and the cutoff T is chosen so that this
/// envelope falls below `abs_tol / 100`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffPolicy {
    pub decay: f64,
    pub power: f64,
    pub scale: f64,
}

impl Default for CutoffPolicy {
    fn default() -> Self {
        Self {
            decay: 1.0,
            power: 0.0,
            scale: 1.0,
        }
    }
}

impl CutoffPolicy {
    pub fn new(decay: f64, power: f64, scale: f64) -> Self {
        Self {
            decay,
            power,
            scale,
        }
    }

    /// Solve scale · e^{-decay·T} · T^power = abs_tol / 100 for T.
    pub fn cutoff(&self, abs_tol: f64) -> f64 {
        let threshold = (abs_tol * 1e-2 / self.scale).max(1e-290);
        let rhs = -threshold.ln();
        let mut t: f64 = (rhs / self.decay).max(2.0);
        for _ in 0..50 {
            t = ((rhs + self.power * t.max(1.0).ln()) / self.decay).max(2.0);
        }
        t * 1.05
    }
}

/// Tolerances and budget of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub cutoff: CutoffPolicy,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 400,
            cutoff: CutoffPolicy::default(),
        }
    }
}

impl QuadratureSpec {
    pub fn with_cutoff(mut self, cutoff: CutoffPolicy) -> Self {
        self.cutoff = cutoff;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.rel_tol.is_nan()
            || self.rel_tol <= 0.0
            || self.abs_tol.is_nan()
            || self.abs_tol <= 0.0
        {
            return Err(Error::Domain(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        let c = &self.cutoff;
        if !(c.decay > 0.0 && c.scale > 0.0 && c.power >= 0.0) || c.decay.is_nan() {
            return Err(Error::Domain(
                "cutoff policy requires decay > 0, scale > 0, power >= 0".into(),
            ));
        }
        Ok(())
    }
}

/// Integration region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    /// [0, ∞), truncated by the [`QuadratureSpec`] cutoff policy.
    HalfLine,
    /// Plain finite interval.
    Interval { lo: f64, hi: f64 },
    /// Finite interval whose integrand carries an integrable factor
    /// (hi - t)^{exponent - 1} near the right endpoint, 0 < exponent < 1.
    IntervalSingularRight { lo: f64, hi: f64, exponent: f64 },
}

/// Value and error estimate of a completed integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

/// QUADPACK-style error rescaling for the Kronrod-Gauss difference.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// One 15-point Kronrod evaluation on [lo, hi]; returns (value, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let abs_half = half.abs();

    let f_center = f(center);
    let mut res_gauss = WG[3] * f_center;
    let mut res_kronrod = WGK[7] * f_center;
    let mut res_abs = res_kronrod.abs();
    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];

    for (j, gauss_weight) in WG.iter().enumerate().take(3) {
        let jtw = 2 * j + 1;
        let absc = half * XGK[jtw];
        let f1 = f(center - absc);
        let f2 = f(center + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        let fsum = f1 + f2;
        res_gauss += gauss_weight * fsum;
        res_kronrod += WGK[jtw] * fsum;
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let jtwm1 = 2 * j;
        let absc = half * XGK[jtwm1];
        let f1 = f(center - absc);
        let f2 = f(center + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        let fsum = f1 + f2;
        res_kronrod += WGK[jtwm1] * fsum;
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_kronrod * half;
    let err = rescale_error(
        (res_kronrod - res_gauss) * half,
        res_abs * abs_half,
        res_asc * abs_half,
    );
    (value, err)
}

struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

/// Globally adaptive bisection on one finite interval. `budget` is shared
/// across the pieces of a composite integration.
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_subdivisions: usize,
    budget: &mut usize,
) -> Result<(f64, f64)> {
    let (value, err) = gk15(f, lo, hi);
    if !value.is_finite() {
        return Err(Error::Domain(
            "integrand produced a non-finite value".into(),
        ));
    }
    let mut segments = vec![Segment { lo, hi, value, err }];
    loop {
        let total_value: f64 = segments.iter().map(|s| s.value).sum();
        let total_err: f64 = segments.iter().map(|s| s.err).sum();
        if total_err <= abs_tol.max(rel_tol * total_value.abs()) {
            return Ok((total_value, total_err));
        }
        if *budget >= max_subdivisions {
            return Err(Error::AccuracyNotReached {
                best: total_value,
                error_estimate: total_err,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.total_cmp(&b.1.err))
            .map(|(i, _)| i)
            .expect("segment list is never empty");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.lo + seg.hi);
        if !(mid > seg.lo && mid < seg.hi) {
            // Interval too narrow to bisect in f64.
            return Err(Error::AccuracyNotReached {
                best: segments.iter().map(|s| s.value).sum::<f64>() + seg.value,
                error_estimate: total_err,
            });
        }
        for (a, b) in [(seg.lo, mid), (mid, seg.hi)] {
            let (v, e) = gk15(f, a, b);
            if !v.is_finite() {
                return Err(Error::Domain(
                    "integrand produced a non-finite value".into(),
                ));
            }
            segments.push(Segment {
                lo: a,
                hi: b,
                value: v,
                err: e,
            });
        }
        *budget += 1;
    }
}

/// Integrate `f` over `support` to the tolerances in `spec`.
///
/// On success the returned error estimate satisfies
/// `error <= rel_tol·|value| + abs_tol`; exhausting the subdivision budget
/// yields [`Error::AccuracyNotReached`] carrying the best estimate.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    support: &Support,
    spec: &QuadratureSpec,
) -> Result<Quadrature> {
    spec.validate()?;
    let mut budget = 0usize;
    let (value, err) = match *support {
        Support::HalfLine => {
            let cut = spec.cutoff.cutoff(spec.abs_tol);
            adaptive(
                &f,
                0.0,
                cut,
                spec.rel_tol,
                spec.abs_tol,
                spec.max_subdivisions,
                &mut budget,
            )?
        }
        Support::Interval { lo, hi } => {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Domain(format!("bad interval [{lo}, {hi}]")));
            }
            adaptive(
                &f,
                lo,
                hi,
                spec.rel_tol,
                spec.abs_tol,
                spec.max_subdivisions,
                &mut budget,
            )?
        }
        Support::IntervalSingularRight { lo, hi, exponent } => {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Domain(format!("bad interval [{lo}, {hi}]")));
            }
            if exponent.is_nan() || exponent <= 0.0 {
                return Err(Error::Domain(format!(
                    "endpoint exponent must be positive, got {exponent}"
                )));
            }
            if exponent >= 1.0 {
                // No singularity: the factor (hi-t)^{exponent-1} is bounded.
                adaptive(
                    &f,
                    lo,
                    hi,
                    spec.rel_tol,
                    spec.abs_tol,
                    spec.max_subdivisions,
                    &mut budget,
                )?
            } else {
                // Split off the last subinterval and substitute u = (hi-t)^a,
                // so that dt·(hi-t)^{a-1} = du/a and the transformed integrand
                // is bounded at u = 0.
                let delta = 0.125 * (hi - lo);
                let split = hi - delta;
                let (v1, e1) = adaptive(
                    &f,
                    lo,
                    split,
                    0.5 * spec.rel_tol,
                    0.5 * spec.abs_tol,
                    spec.max_subdivisions,
                    &mut budget,
                )?;
                let a = exponent;
                let g = |u: f64| f(hi - u.powf(1.0 / a)) * u.powf((1.0 - a) / a) / a;
                let (v2, e2) = adaptive(
                    &g,
                    0.0,
                    delta.powf(a),
                    0.5 * spec.rel_tol,
                    0.5 * spec.abs_tol,
                    spec.max_subdivisions,
                    &mut budget,
                )?;
                (v1 + v2, e1 + e2)
            }
        }
    };
    Ok(Quadrature {
        value,
        error_estimate: err,
        subdivisions: budget,
    })
}
