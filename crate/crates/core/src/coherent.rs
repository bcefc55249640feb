//! Coherent states over generalized hypergeometric structure functions.
//!
//! A state labeled by complex z expands in the Fock basis as
//! ⟨n|z⟩ = z^n / sqrt(ρ(n) · N(|z|²)) with normalization N = pFq(a; b; |z|²)
//! and structure constants ρ(n) = Π_{m<=n} e(m). The spectrum e(m) either
//! derives from the hypergeometric parameters or is the linear offset form
//! e(n) = n + e0.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{
    integrate, pfq, pfq_complex, CutoffPolicy, HyperParams, QuadratureSpec, WeightFamily,
};

/// Dimensionless energy spectrum defining the structure constants.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumModel {
    /// e(m) = m · Π(b_j + m - 1) / Π(a_i + m - 1) for m >= 1, with e(0) = 0.
    Ghg(HyperParams),
    /// e(n) = n + e0.
    Linear { e0: f64 },
}

impl SpectrumModel {
    /// Hypergeometric spectrum. Parameters must be positive so that every
    /// e(m), m >= 1, is positive.
    pub fn ghg(params: HyperParams) -> Result<Self> {
        if params
            .upper()
            .iter()
            .chain(params.lower())
            .any(|&v| v <= 0.0)
        {
            return Err(Error::InvalidParams(
                "hypergeometric spectra require positive parameters".into(),
            ));
        }
        Ok(Self::Ghg(params))
    }

    /// Linear spectrum with offset e0 >= 0.
    pub fn linear(e0: f64) -> Result<Self> {
        if e0.is_nan() || e0 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "linear spectrum requires e0 >= 0, got {e0}"
            )));
        }
        Ok(Self::Linear { e0 })
    }

    /// Dimensionless eigenvalue e(m). The m = 0 value is 0 for hypergeometric
    /// spectra and e0 for linear ones; the structure constants only ever use
    /// m >= 1, but thermal Boltzmann weights need e(0).
    pub fn eigen(&self, m: usize) -> f64 {
        match self {
            Self::Ghg(_) if m == 0 => 0.0,
            Self::Ghg(params) => params.rho_ratio(m as f64 - 1.0),
            Self::Linear { e0 } => m as f64 + e0,
        }
    }

    /// Structure constant ρ(n) = Π_{m=1..n} e(m); ρ(0) = 1.
    pub fn rho(&self, n: usize) -> Result<f64> {
        let mut product = 1.0;
        for m in 1..=n {
            let e = self.eigen(m);
            if e.is_nan() || e <= 0.0 {
                return Err(Error::Spectrum { m, value: e });
            }
            product *= e;
        }
        Ok(product)
    }

    /// The parameter set whose normalization function matches this spectrum.
    pub fn equivalent_params(&self) -> HyperParams {
        match self {
            Self::Ghg(params) => params.clone(),
            Self::Linear { e0 } => HyperParams::new(vec![1.0], vec![e0 + 1.0])
                .expect("e0 + 1 >= 1 is a valid lower parameter"),
        }
    }

    /// Semantic match against a parameter set: the level ratios
    /// ρ(n+1)/ρ(n) must agree. This deliberately identifies structurally
    /// different parameter vectors with identical structure constants
    /// (e.g. the linear spectrum at e0 = 0 and the empty parameter set).
    pub fn matches_params(&self, params: &HyperParams) -> bool {
        (0..=32).all(|n| {
            let own = self.eigen(n + 1);
            let other = params.rho_ratio(n as f64);
            (own - other).abs() <= 1e-12 * own.abs().max(other.abs()).max(1.0)
        })
    }

    pub fn label(&self) -> String {
        match self {
            Self::Ghg(params) => format!("ghg a={:?} b={:?}", params.upper(), params.lower()),
            Self::Linear { e0 } => format!("linear e0={e0}"),
        }
    }
}

/// A coherent state truncated at Fock level `order`.
#[derive(Debug, Clone)]
pub struct CoherentStateVec {
    z: Complex64,
    params: HyperParams,
    amps: Vec<Complex64>,
    normalization: f64,
    norm_defect: f64,
}

impl CoherentStateVec {
    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.amps.len() - 1
    }

    pub fn amp(&self, n: usize) -> Complex64 {
        self.amps[n]
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// N(|z|²) = pFq(a; b; |z|²).
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    /// 1 - Σ_n |⟨n|z⟩|²: the probability mass lost to truncation.
    pub fn norm_defect(&self) -> f64 {
        self.norm_defect
    }
}

/// Fock amplitudes ⟨n|z⟩ = z^n / sqrt(ρ(n) · N(|z|²)) for n = 0..=order.
pub fn cs_amplitudes(params: &HyperParams, z: Complex64, order: usize) -> Result<CoherentStateVec> {
    if params
        .upper()
        .iter()
        .chain(params.lower())
        .any(|&v| v <= 0.0)
    {
        return Err(Error::InvalidParams(
            "coherent states require positive hypergeometric parameters".into(),
        ));
    }
    let x = z.norm_sqr();
    let radius = params.radius_bound()?;
    if x >= radius {
        return Err(Error::Divergence { x_abs: x, radius });
    }
    let normalization = pfq(params, x, 1e-15)?.value;

    let mut amps = Vec::with_capacity(order + 1);
    let mut amp = Complex64::new(1.0 / normalization.sqrt(), 0.0);
    amps.push(amp);
    for n in 1..=order {
        // ρ(n)/ρ(n-1) = e(n)
        let level = params.rho_ratio(n as f64 - 1.0);
        amp *= z / level.sqrt();
        amps.push(amp);
    }
    let captured: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let norm_defect = (1.0 - captured).max(0.0);
    Ok(CoherentStateVec {
        z,
        params: params.clone(),
        amps,
        normalization,
        norm_defect,
    })
}

/// Overlap ⟨z1|z2⟩ computed from the truncated amplitudes, cross-checked
/// against the direct kernel pFq(a; b; conj(z1)·z2) / sqrt(N(|z1|²) N(|z2|²))
/// to 1e-10. A mismatch means the truncation order was too small.
pub fn overlap(
    params: &HyperParams,
    z1: Complex64,
    z2: Complex64,
    order: usize,
) -> Result<Complex64> {
    let cs1 = cs_amplitudes(params, z1, order)?;
    let cs2 = cs_amplitudes(params, z2, order)?;
    let from_amps: Complex64 = (0..=order).map(|n| cs1.amp(n).conj() * cs2.amp(n)).sum();

    let kernel = pfq_complex(params, z1.conj() * z2, 1e-15)?.value
        / (cs1.normalization() * cs2.normalization()).sqrt();
    if (from_amps - kernel).norm() > 1e-10 * kernel.norm().max(1.0) {
        return Err(Error::NonConvergence {
            terms: order + 1,
            last_term: (cs1.amp(order).conj() * cs2.amp(order)).norm(),
        });
    }
    Ok(from_amps)
}

/// Gram matrix of overlaps for a list of labels, from shared amplitude sums.
pub fn gram_matrix(
    params: &HyperParams,
    labels: &[Complex64],
    order: usize,
) -> Result<DMatrix<Complex64>> {
    let states: Vec<CoherentStateVec> = labels
        .iter()
        .map(|&z| cs_amplitudes(params, z, order))
        .collect::<Result<_>>()?;
    let k = states.len();
    let mut gram = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = (0..=order)
                .map(|n| states[i].amp(n).conj() * states[j].amp(n))
                .sum();
        }
    }
    Ok(gram)
}

/// Lowering/raising operators in a truncated Fock basis.
///
/// The lowering matrix has sqrt(e(n)) at position (n-1, n) and the raising
/// matrix is its transpose. Their product raising·lowering is diagonal with
/// entries e(n) for n >= 1; the n = 0 entry is 0 by construction, since the
/// vacuum is annihilated before the raising operator can act.
#[derive(Debug, Clone)]
pub struct LadderMatrices {
    lowering: DMatrix<f64>,
    raising: DMatrix<f64>,
    spectrum: SpectrumModel,
}

impl LadderMatrices {
    pub fn lowering(&self) -> &DMatrix<f64> {
        &self.lowering
    }

    pub fn raising(&self) -> &DMatrix<f64> {
        &self.raising
    }

    pub fn spectrum(&self) -> &SpectrumModel {
        &self.spectrum
    }

    pub fn dim(&self) -> usize {
        self.lowering.nrows()
    }

    /// Max absolute deviation of raising·lowering from diag(0, e(1), ..., e(N)),
    /// including off-diagonal entries.
    pub fn number_diagonal_residual(&self) -> f64 {
        let product = &self.raising * &self.lowering;
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let expected = if i == j && i > 0 {
                    self.spectrum.eigen(i)
                } else {
                    0.0
                };
                worst = worst.max((product[(i, j)] - expected).abs());
            }
        }
        worst
    }
}

/// Build the ladder pair for a spectrum at the given truncation order (>= 1).
pub fn ladder_matrices(spectrum: &SpectrumModel, order: usize) -> Result<LadderMatrices> {
    if order < 1 {
        return Err(Error::Domain("ladder matrices need order >= 1".into()));
    }
    let dim = order + 1;
    let mut lowering = DMatrix::zeros(dim, dim);
    for n in 1..=order {
        let e = spectrum.eigen(n);
        if e.is_nan() || e <= 0.0 {
            return Err(Error::Spectrum { m: n, value: e });
        }
        lowering[(n - 1, n)] = e.sqrt();
    }
    let raising = lowering.transpose();
    Ok(LadderMatrices {
        lowering,
        raising,
        spectrum: spectrum.clone(),
    })
}

/// Residual of the eigenvector relation (lowering - z)·|z⟩ = 0 on the
/// truncated state, together with the analytic bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResidual {
    /// l2 norm of sqrt(e(n+1))·a_{n+1} - z·a_n over n = 0..=N-1.
    pub residual: f64,
    /// |z|·|a_N|: the magnitude of the one component the truncation cannot
    /// cancel.
    pub truncation_bound: f64,
}

/// Check that the truncated coherent state is an eigenvector of the lowering
/// operator with eigenvalue z, up to the recorded truncation bound.
pub fn annihilation_eigen_check(
    cs: &CoherentStateVec,
    spectrum: &SpectrumModel,
) -> Result<EigenResidual> {
    if !spectrum.matches_params(cs.params()) {
        return Err(Error::ConfigMismatch(format!(
            "spectrum {} does not match the state's parameters",
            spectrum.label()
        )));
    }
    let order = cs.order();
    let z = cs.z();
    let mut sum_sq = 0.0;
    for n in 0..order {
        let r = spectrum.eigen(n + 1).sqrt() * cs.amp(n + 1) - z * cs.amp(n);
        sum_sq += r.norm_sqr();
    }
    Ok(EigenResidual {
        residual: sum_sq.sqrt(),
        truncation_bound: z.norm() * cs.amp(order).norm(),
    })
}

/// Worst-case result of a per-level verification sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentCheck {
    pub max_rel_error: f64,
    pub worst_n: usize,
    pub lhs_at_worst: f64,
    pub rhs_at_worst: f64,
}

/// Verify the moment equation ∫ w(t) t^n dt = [ΠΓ(b)/ΠΓ(a)] ρ(n) for
/// n = 0..=n_max by quadrature against the spectrum's structure constants.
pub fn moment_identity_check(
    family: &WeightFamily,
    spectrum: &SpectrumModel,
    n_max: usize,
    spec: &QuadratureSpec,
) -> Result<MomentCheck> {
    if !spectrum.matches_params(&family.matching_params()) {
        return Err(Error::ConfigMismatch(format!(
            "weight family {family:?} does not match spectrum {}",
            spectrum.label()
        )));
    }
    let prefactor = family.matching_params().gamma_prefactor()?;
    let support = family.support();
    let mut check = MomentCheck {
        max_rel_error: 0.0,
        worst_n: 0,
        lhs_at_worst: 0.0,
        rhs_at_worst: 0.0,
    };
    for n in 0..=n_max {
        let power_envelope = match family {
            WeightFamily::GammaLaguerre { e0 } => e0 + n as f64,
            _ => n as f64,
        };
        let spec_n = spec.with_cutoff(CutoffPolicy::new(1.0, power_envelope, 1.0));
        let quad = integrate(
            |t| family.eval(t).unwrap_or(f64::NAN) * t.powi(n as i32),
            &support,
            &spec_n,
        )?;
        let rhs = prefactor * spectrum.rho(n)?;
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

/// Result of the completeness (resolution of identity) verification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionCheck {
    /// max |M_nn - 1| over the checked levels.
    pub max_diag_error: f64,
    pub worst_n: usize,
    /// Off-diagonal entries vanish through the angular phase integral before
    /// any numerics run; recorded as the structural zero it is.
    pub max_offdiag: f64,
}

/// Diagonal reconstruction M_nn = prefactor · ∫ w(t) t^n dt / ρ(n), which the
/// completeness relation requires to be 1.
///
/// The radial reduction has already cancelled the normalization function
/// between the measure (which carries N(t)) and the squared amplitude (which
/// carries 1/N(t)); the angular integral kills every off-diagonal term
/// exactly, so only the diagonal needs quadrature.
pub fn identity_resolution_check(
    params: &HyperParams,
    family: &WeightFamily,
    order: usize,
    spec: &QuadratureSpec,
) -> Result<ResolutionCheck> {
    let spectrum = SpectrumModel::ghg(params.clone())?;
    if !spectrum.matches_params(&family.matching_params()) {
        return Err(Error::ConfigMismatch(format!(
            "weight family {family:?} does not match parameters {params:?}"
        )));
    }
    let measure_prefactor = 1.0 / params.gamma_prefactor()?;
    let support = family.support();
    let mut check = ResolutionCheck {
        max_diag_error: 0.0,
        worst_n: 0,
        max_offdiag: 0.0,
    };
    for n in 0..=order {
        let power_envelope = match family {
            WeightFamily::GammaLaguerre { e0 } => e0 + n as f64,
            _ => n as f64,
        };
        let spec_n = spec.with_cutoff(CutoffPolicy::new(1.0, power_envelope, 1.0));
        let rho = spectrum.rho(n)?;
        let quad = integrate(
            |t| family.eval(t).unwrap_or(f64::NAN) * t.powi(n as i32) / rho,
            &support,
            &spec_n,
        )?;
        let m_nn = measure_prefactor * quad.value;
        let err = (m_nn - 1.0).abs();
        if err > check.max_diag_error {
            check.max_diag_error = err;
            check.worst_n = n;
        }
    }
    Ok(check)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen oracle references keep their full digits
mod tests {
    use super::*;
    use nalgebra::linalg::SymmetricEigen;

    fn ho_params() -> HyperParams {
        HyperParams::exponential()
    }

    #[test]
    fn structure_rho_values() {
        let ho = SpectrumModel::ghg(ho_params()).unwrap();
        assert_eq!(ho.rho(0).unwrap(), 1.0);
        assert_eq!(ho.rho(4).unwrap(), 24.0);

        let linear = SpectrumModel::linear(1.0).unwrap();
        assert_eq!(linear.rho(3).unwrap(), 24.0); // (2)_3 = 2·3·4
    }

    #[test]
    fn eigenvalues() {
        let ho = SpectrumModel::ghg(ho_params()).unwrap();
        assert_eq!(ho.eigen(5), 5.0);
        assert_eq!(ho.eigen(0), 0.0);

        let linear = SpectrumModel::linear(0.5).unwrap();
        assert_eq!(linear.eigen(2), 2.5);
        assert_eq!(linear.eigen(0), 0.5);

        // a = [1], b = [e0 + 1] reproduces the linear spectrum at m >= 1.
        let e0 = 2.0;
        let ghg = SpectrumModel::ghg(HyperParams::new(vec![1.0], vec![e0 + 1.0]).unwrap()).unwrap();
        assert!((ghg.eigen(3) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn rho_ratio_is_eigenvalue() {
        let models = [
            SpectrumModel::ghg(ho_params()).unwrap(),
            SpectrumModel::linear(1.5).unwrap(),
            SpectrumModel::ghg(HyperParams::new(vec![0.8], vec![2.5]).unwrap()).unwrap(),
        ];
        for model in &models {
            for n in 0..50 {
                let ratio = model.rho(n + 1).unwrap() / model.rho(n).unwrap();
                let e = model.eigen(n + 1);
                assert!(
                    (ratio - e).abs() <= 1e-12 * e.abs().max(1.0),
                    "{} at n={n}",
                    model.label()
                );
            }
        }
    }

    #[test]
    fn spectrum_validation() {
        assert!(SpectrumModel::linear(-0.1).is_err());
        assert!(SpectrumModel::ghg(HyperParams::new(vec![-1.0], vec![2.0]).unwrap()).is_err());
    }

    #[test]
    fn vacuum_state_amplitudes() {
        let cs = cs_amplitudes(&ho_params(), Complex64::new(0.0, 0.0), 8).unwrap();
        assert_eq!(cs.amp(0), Complex64::new(1.0, 0.0));
        for n in 1..=8 {
            assert_eq!(cs.amp(n), Complex64::new(0.0, 0.0));
        }
        assert_eq!(cs.norm_defect(), 0.0);
    }

    #[test]
    fn poisson_statistics_for_exponential_family() {
        let cs = cs_amplitudes(&ho_params(), Complex64::new(1.0, 0.0), 60).unwrap();
        let mut factorial = 1.0;
        for n in 0..=8 {
            if n > 0 {
                factorial *= n as f64;
            }
            let expected = (-1.0f64).exp() / factorial;
            assert!((cs.amp(n).norm_sqr() - expected).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn kummer_family_ground_occupation() {
        // |amps[0]|^2 = 1 / 1F1(1; 2; 0.5); frozen 30-digit reference.
        let params = HyperParams::new(vec![1.0], vec![2.0]).unwrap();
        let x = 0.5f64;
        let cs = cs_amplitudes(&params, Complex64::new(x.sqrt(), 0.0), 60).unwrap();
        assert!((cs.amp(0).norm_sqr() - 0.77074704126839914207).abs() < 1e-13);
    }

    #[test]
    fn truncation_accounting() {
        let z = Complex64::new(1.0, 0.0);
        let cs = cs_amplitudes(&ho_params(), z, 60).unwrap();
        let captured: f64 = cs.amps().iter().map(|a| a.norm_sqr()).sum();
        assert!((captured + cs.norm_defect() - 1.0).abs() < 1e-13);

        let short = cs_amplitudes(&ho_params(), z, 3).unwrap();
        assert!(short.norm_defect() > 1e-3);
    }

    #[test]
    fn overlap_closed_form_ho() {
        let z1 = Complex64::new(0.4, 0.3);
        let z2 = Complex64::new(-0.2, 0.6);
        let got = overlap(&ho_params(), z1, z2, 60).unwrap();
        let expected = (z1.conj() * z2 - (z1.norm_sqr() + z2.norm_sqr()) / 2.0).exp();
        assert!((got - expected).norm() < 1e-12);
    }

    #[test]
    fn overlap_normalization_and_vacuum_component() {
        let z = Complex64::new(0.7, -0.1);
        let got = overlap(&ho_params(), z, z, 70).unwrap();
        assert!((got - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let vac = overlap(&ho_params(), z, Complex64::new(0.0, 0.0), 70).unwrap();
        let expected = 1.0 / pfq(&ho_params(), z.norm_sqr(), 1e-15).unwrap().value.sqrt();
        assert!((vac - Complex64::new(expected, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn overlap_requires_adequate_order() {
        let z = Complex64::new(1.4, 0.0);
        assert!(matches!(
            overlap(&ho_params(), z, z, 3),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn overlap_magnitude_bounded_on_grid() {
        let params = HyperParams::new(vec![1.0], vec![3.0]).unwrap();
        let grid: Vec<Complex64> = (0..5)
            .flat_map(|i| (0..5).map(move |j| Complex64::new(0.3 * i as f64, 0.3 * j as f64 - 0.6)))
            .collect();
        for (i, &z1) in grid.iter().enumerate() {
            for (j, &z2) in grid.iter().enumerate() {
                let value = overlap(&params, z1, z2, 80).unwrap().norm();
                assert!(value <= 1.0 + 1e-12);
                if i != j {
                    assert!(value < 1.0, "distinct labels must not saturate the bound");
                }
            }
        }
    }

    #[test]
    fn ladder_structure() {
        let ho = SpectrumModel::ghg(ho_params()).unwrap();
        let ladder = ladder_matrices(&ho, 2).unwrap();
        assert_eq!(ladder.lowering()[(0, 1)], 1.0);
        assert!((ladder.lowering()[(1, 2)] - 2.0f64.sqrt()).abs() < 1e-15);
        let product = ladder.raising() * ladder.lowering();
        for (n, expected) in [0.0, 1.0, 2.0].into_iter().enumerate() {
            assert!((product[(n, n)] - expected).abs() < 1e-14);
        }
        assert!(ladder.number_diagonal_residual() < 1e-14);

        let linear = SpectrumModel::linear(1.0).unwrap();
        let ladder = ladder_matrices(&linear, 2).unwrap();
        let product = ladder.raising() * ladder.lowering();
        assert_eq!(product[(0, 0)], 0.0);
        assert!((product[(1, 1)] - 2.0).abs() < 1e-14);
        assert!((product[(2, 2)] - 3.0).abs() < 1e-14);

        let minimal = ladder_matrices(&linear, 1).unwrap();
        assert_eq!(minimal.dim(), 2);
        assert!((minimal.lowering()[(0, 1)] - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn annihilation_eigenvector() {
        let ho = SpectrumModel::ghg(ho_params()).unwrap();
        let vac = cs_amplitudes(&ho_params(), Complex64::new(0.0, 0.0), 10).unwrap();
        let check = annihilation_eigen_check(&vac, &ho).unwrap();
        assert_eq!(check.residual, 0.0);

        let cs = cs_amplitudes(&ho_params(), Complex64::new(1.0, 0.0), 60).unwrap();
        let check = annihilation_eigen_check(&cs, &ho).unwrap();
        assert!(check.residual < 1e-12, "residual {}", check.residual);

        let params = HyperParams::new(vec![1.0], vec![3.0]).unwrap();
        let spectrum = SpectrumModel::ghg(params.clone()).unwrap();
        let cs = cs_amplitudes(&params, Complex64::new(0.0, 1.0), 60).unwrap();
        let check = annihilation_eigen_check(&cs, &spectrum).unwrap();
        assert!(check.residual < 1e-12);

        // a=[1], b=[3] is semantically the linear spectrum at e0 = 2, so the
        // matcher accepts it; a different offset must be rejected.
        let equivalent = SpectrumModel::linear(2.0).unwrap();
        assert!(annihilation_eigen_check(&cs, &equivalent).is_ok());
        let wrong = SpectrumModel::linear(5.0).unwrap();
        assert!(matches!(
            annihilation_eigen_check(&cs, &wrong),
            Err(Error::ConfigMismatch(_))
        ));
    }

    #[test]
    fn moment_identities_three_families() {
        let spec = QuadratureSpec::default();
        let cases: Vec<(WeightFamily, SpectrumModel)> = vec![
            (
                WeightFamily::Exponential,
                SpectrumModel::ghg(ho_params()).unwrap(),
            ),
            (
                WeightFamily::beta(1.0).unwrap(),
                SpectrumModel::ghg(HyperParams::new(vec![2.0], vec![]).unwrap()).unwrap(),
            ),
            (
                WeightFamily::gamma_laguerre(2.0).unwrap(),
                SpectrumModel::linear(2.0).unwrap(),
            ),
        ];
        for (family, spectrum) in &cases {
            let check = moment_identity_check(family, spectrum, 20, &spec).unwrap();
            assert!(check.max_rel_error < 1e-8, "{family:?}: {check:?}");
        }
    }

    #[test]
    fn moment_identity_example_values() {
        let spec = QuadratureSpec::default();
        // Exponential at n = 5: moment is 5! = 120.
        let exp_spec = SpectrumModel::ghg(ho_params()).unwrap();
        let check = moment_identity_check(&WeightFamily::Exponential, &exp_spec, 5, &spec).unwrap();
        assert!(check.max_rel_error < 1e-9);

        let mismatch = moment_identity_check(
            &WeightFamily::Exponential,
            &SpectrumModel::linear(1.0).unwrap(),
            3,
            &spec,
        );
        assert!(matches!(mismatch, Err(Error::ConfigMismatch(_))));
    }

    #[test]
    fn resolution_of_identity_diagonals() {
        let spec = QuadratureSpec::default();
        let cases: Vec<(HyperParams, WeightFamily)> = vec![
            (HyperParams::exponential(), WeightFamily::Exponential),
            (
                HyperParams::new(vec![2.0], vec![]).unwrap(),
                WeightFamily::beta(1.0).unwrap(),
            ),
            (
                HyperParams::new(vec![1.0], vec![2.0]).unwrap(),
                WeightFamily::gamma_laguerre(1.0).unwrap(),
            ),
        ];
        for (params, family) in &cases {
            let check = identity_resolution_check(params, family, 20, &spec).unwrap();
            assert!(check.max_diag_error < 1e-7, "{family:?}: {check:?}");
            assert_eq!(check.max_offdiag, 0.0);
        }
    }

    #[test]
    fn gram_matrix_positive_semidefinite() {
        let params = HyperParams::new(vec![1.0], vec![2.0]).unwrap();
        let labels = [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.6),
            Complex64::new(-0.4, 0.2),
            Complex64::new(0.3, -0.3),
            Complex64::new(0.7, 0.1),
        ];
        let gram = gram_matrix(&params, &labels, 80).unwrap();
        let eigen = SymmetricEigen::new(gram);
        for value in eigen.eigenvalues.iter() {
            assert!(*value >= -1e-10, "eigenvalue {value}");
        }
    }
}
