//! Truncated formal power series.
//!
//! A [`FormalSeries`] holds coefficients c_0..c_N of Σ c_n x^n. All arithmetic
//! closes at the truncation order: terms above it are dropped and the drop is
//! recorded in the `truncated` flag, so exact polynomial computations remain
//! distinguishable from lossy ones.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FormalSeries {
    coeffs: Vec<f64>,
    truncated: bool,
}

impl FormalSeries {
    /// Series with the given coefficients c_0..c_N (order N = len - 1).
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least the constant coefficient".into(),
            ));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite(
                "series coefficients must be finite".into(),
            ));
        }
        Ok(Self {
            coeffs,
            truncated: false,
        })
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0.0; order + 1],
            truncated: false,
        }
    }

    /// The monomial x^degree represented at the given order.
    pub fn monomial(degree: usize, order: usize) -> Result<Self> {
        if degree > order {
            return Err(Error::Domain(format!(
                "monomial degree {degree} exceeds truncation order {order}"
            )));
        }
        let mut coeffs = vec![0.0; order + 1];
        coeffs[degree] = 1.0;
        Ok(Self {
            coeffs,
            truncated: false,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> f64 {
        self.coeffs.get(n).copied().unwrap_or(0.0)
    }

    /// True if any arithmetic step discarded a nonzero coefficient above the
    /// truncation order.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Apply a scalar multiplier to each coefficient: coeffs[n] -> f(n)·coeffs[n].
    /// This is the diagonal action used by the theta machinery.
    pub fn map_indexed(&self, f: impl Fn(usize) -> f64) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, &c) in self.coeffs.iter().enumerate() {
            let factor = f(n);
            if !factor.is_finite() {
                return Err(Error::NonFinite(format!(
                    "diagonal factor at index {n} is {factor}"
                )));
            }
            coeffs.push(factor * c);
        }
        Ok(Self {
            coeffs,
            truncated: self.truncated,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n] + other.coeffs[n])
            .collect();
        let dropped = Self::tail_nonzero(self, order) || Self::tail_nonzero(other, order);
        Self {
            coeffs,
            truncated: self.truncated || other.truncated || dropped,
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| s * c).collect(),
            truncated: self.truncated,
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn cauchy_product(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![0.0; order + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        // Detect whether any dropped cross term was nonzero.
        let mut dropped = false;
        'outer: for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > order && b != 0.0 {
                    dropped = true;
                    break 'outer;
                }
            }
        }
        Self {
            coeffs,
            truncated: self.truncated || other.truncated || dropped,
        }
    }

    /// Multiplication by the variable: shifts coefficients up one index and
    /// drops the top coefficient.
    pub fn shift_up(&self) -> Self {
        let order = self.order();
        let mut coeffs = vec![0.0; order + 1];
        coeffs[1..=order].copy_from_slice(&self.coeffs[..order]);
        let dropped = self.coeffs[order] != 0.0;
        Self {
            coeffs,
            truncated: self.truncated || dropped,
        }
    }

    /// Argument rescaling s(x) -> s(g·x): coeffs[n] -> g^n · coeffs[n].
    pub fn scale_argument(&self, g: f64) -> Self {
        let mut power = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = power * c;
                power *= g;
                v
            })
            .collect();
        Self {
            coeffs,
            truncated: self.truncated,
        }
    }

    /// Horner evaluation at x. Truncation error is the caller's concern; see
    /// [`FormalSeries::eval_checked`] for a guarded version.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Evaluate at x, failing when the last retained term is not negligible
    /// against the value (the truncation tail would contaminate identity
    /// residuals). A zero top coefficient marks an exact polynomial and is
    /// always reliable.
    pub fn eval_checked(&self, x: f64) -> Result<f64> {
        let value = self.eval(x);
        let order = self.order();
        let tail_proxy = (self.coeff(order) * x.powi(order as i32)).abs();
        if tail_proxy > 1e-12 * value.abs().max(1.0) {
            return Err(Error::UnreliableEvaluation { x, tail_proxy });
        }
        Ok(value)
    }

    /// k-th derivative at x, exact in the coefficients:
    /// Σ_{m>=k} c_m · m(m-1)···(m-k+1) · x^{m-k}.
    pub fn derivative_at(&self, k: usize, x: f64) -> f64 {
        let mut sum = 0.0;
        for (m, &c) in self.coeffs.iter().enumerate().skip(k) {
            let mut falling = 1.0;
            for j in 0..k {
                falling *= (m - j) as f64;
            }
            sum += c * falling * x.powi((m - k) as i32);
        }
        sum
    }

    fn tail_nonzero(series: &Self, order: usize) -> bool {
        series.coeffs.iter().skip(order + 1).any(|&c| c != 0.0)
    }
}
