//! Cross-module integration checks exercising the public API surface.

use num_complex::Complex64;

use ghgcs::coherent::{cs_amplitudes, SpectrumModel};
use ghgcs::report::CaseStatus;
use ghgcs::special::{pfq, HyperParams, WeightFamily};
use ghgcs::suites::{run_suite, SuiteConfig, SuiteKind};
use ghgcs::thermal::{density_diag, husimi_q_ratio, partition_function, ThermalModel};

/// The resolution-of-identity integrand simplifies because the measure
/// carries the normalization function and the squared amplitude carries its
/// inverse. Validate the simplified form against the explicit amplitude
/// route at spot points.
#[test]
fn resolution_integrand_matches_amplitude_route() {
    let cases: Vec<(HyperParams, WeightFamily)> = vec![
        (HyperParams::exponential(), WeightFamily::Exponential),
        (
            HyperParams::new(vec![1.0], vec![2.0]).unwrap(),
            WeightFamily::gamma_laguerre(1.0).unwrap(),
        ),
    ];
    for (params, family) in &cases {
        let spectrum = SpectrumModel::ghg(params.clone()).unwrap();
        for n in [0usize, 1, 3] {
            for t in [0.2, 1.0, 2.5] {
                let normalization = pfq(params, t, 1e-15).unwrap().value;
                let cs = cs_amplitudes(params, Complex64::new(t.sqrt(), 0.0), 48).unwrap();
                let explicit = family.eval(t).unwrap() * normalization * cs.amp(n).norm_sqr();
                let simplified =
                    family.eval(t).unwrap() * t.powi(n as i32) / spectrum.rho(n).unwrap();
                assert!(
                    (explicit - simplified).abs() <= 1e-13 * simplified.abs(),
                    "params {params:?}, n={n}, t={t}: {explicit} vs {simplified}"
                );
            }
        }
    }
}

/// Thermal machinery over a genuinely nonlinear spectrum: e(m) = m(m+1).
/// Partition, occupation, and the ratio-form Husimi distribution all run on
/// the series path; only the closed forms are linear-only.
#[test]
fn thermal_over_nonlinear_spectrum() {
    let params = HyperParams::new(vec![], vec![2.0]).unwrap();
    let spectrum = SpectrumModel::ghg(params.clone()).unwrap();
    assert_eq!(spectrum.eigen(1), 2.0);
    assert_eq!(spectrum.eigen(2), 6.0);

    let model = ThermalModel::new(0.5, spectrum).unwrap();
    let z = partition_function(&model, 1e-15).unwrap();
    let brute: f64 = (0..100)
        .map(|n| {
            let nf = n as f64;
            (-0.5 * nf * (nf + 1.0)).exp()
        })
        .sum();
    assert!((z.series - brute).abs() < 1e-14);
    assert!(z.closed_form.is_none());

    let diag = density_diag(&model, 10).unwrap();
    assert!((diag[0] - 1.0 / z.series).abs() < 1e-15);

    // Husimi ratio at x = 0 collapses to the ground-state weight 1/Z; at
    // x > 0 compare against a brute-force evaluation of the weighted series.
    let q0 = husimi_q_ratio(&model, &params, 0.0, 1e-14).unwrap();
    assert!((q0 - 1.0 / z.series).abs() < 1e-14);

    let x = 0.8f64;
    let weighted: f64 = (0..60)
        .map(|n| {
            let nf = n as f64;
            let rho: f64 = (1..=n).map(|m| m as f64 * (m as f64 + 1.0)).product();
            (-0.5 * nf * (nf + 1.0)).exp() * x.powi(n) / rho
        })
        .sum();
    let expected = weighted / (z.series * pfq(&params, x, 1e-15).unwrap().value);
    let got = husimi_q_ratio(&model, &params, x, 1e-14).unwrap();
    assert!((got - expected).abs() < 1e-14, "{got} vs {expected}");
}

#[test]
fn suite_reports_are_well_formed() {
    let config = SuiteConfig::default();
    let report = run_suite(SuiteKind::All, &config);

    assert!(report.all_pass());
    assert_eq!(report.summary.total, report.cases.len());
    assert_eq!(
        report.summary.pass
            + report.summary.fail
            + report.summary.reported_only
            + report.summary.parameter_degenerate,
        report.summary.total
    );

    // Reported-only cases carry no tolerance and never affect the outcome.
    for case in &report.cases {
        match case.status {
            CaseStatus::ReportedOnly => assert!(case.tolerance.is_none(), "{}", case.name),
            CaseStatus::Pass => assert!(case.tolerance.is_some(), "{}", case.name),
            _ => {}
        }
    }

    // Deterministic bodies in both formats.
    let again = run_suite(SuiteKind::All, &config);
    assert_eq!(report.to_json(), again.to_json());
    assert_eq!(report.to_csv(), again.to_csv());

    // Sub-suites partition the full run.
    let split: usize = [
        SuiteKind::Theta,
        SuiteKind::Moments,
        SuiteKind::Thermal,
        SuiteKind::Identities,
    ]
    .into_iter()
    .map(|kind| run_suite(kind, &config).summary.total)
    .sum();
    assert_eq!(split, report.summary.total);
}

/// Shrunken grids still produce a coherent, passing report: the config is
/// honored rather than silently ignored.
#[test]
fn suite_config_grids_are_honored() {
    let config = SuiteConfig {
        c_grid: vec![0.0, 0.5],
        s_grid: vec![2.0],
        beta_grid: vec![1.0],
        e0_grid: vec![0.0, 1.0],
        order: 20,
        ..SuiteConfig::default()
    };
    let report = run_suite(SuiteKind::Identities, &config);
    assert!(report.all_pass());
    let ho1d = report
        .cases
        .iter()
        .filter(|c| c.identity == "ho1d-exponential-integral")
        .count();
    assert_eq!(ho1d, 2);
    let chains = report
        .cases
        .iter()
        .filter(|c| c.identity == "confluent-product-chain")
        .count();
    assert_eq!(chains, 2);
}
