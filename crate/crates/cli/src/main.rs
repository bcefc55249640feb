//! Command-line front end for the hypergeometric coherent-state library.
//!
//! Subcommands: `eval` (series values, radii, weights), `cs` (amplitude
//! tables), `thermal` (quasi-distribution grids), `verify` (the verification
//! suites), and `radius` as a shorthand for `eval radius`.
//!
//! Exit codes: 0 on success with all assertions passing, 1 on a numeric
//! failure (divergence, non-convergence, failed verification case), 2 on a
//! usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;

use ghgcs::coherent::cs_amplitudes;
use ghgcs::error::Error as CoreError;
use ghgcs::special::{convergence_radius, pfq, HyperParams, Radius, WeightFamily};
use ghgcs::suites::{run_suite, SuiteConfig, SuiteKind};
use ghgcs::thermal::{husimi_q_closed_linear, husimi_q_ratio, p_function_linear, ThermalModel};
use ghgcs::QuadratureSpec;

#[derive(Parser)]
#[command(
    name = "ghgcs",
    version,
    about = "Hypergeometric coherent-state numerics and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a series, a convergence radius, or a measure weight.
    Eval(EvalArgs),
    /// Print the Fock amplitude table of a coherent state.
    Cs(CsArgs),
    /// Emit a quasi-distribution grid for a linear-spectrum thermal state.
    Thermal(ThermalArgs),
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// Shorthand for `eval radius`.
    Radius(RadiusArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[command(subcommand)]
    kind: EvalKind,
}

#[derive(Subcommand)]
enum EvalKind {
    /// pFq(a; b; x) by direct summation.
    Pfq {
        /// Upper parameters (repeatable).
        #[arg(long = "a", num_args = 1)]
        a: Vec<f64>,
        /// Lower parameters (repeatable).
        #[arg(long = "b", num_args = 1)]
        b: Vec<f64>,
        #[arg(long)]
        x: f64,
        /// Relative term tolerance of the stopping rule.
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
    },
    /// Convergence radius of the coherent-state label disk.
    Radius(RadiusArgs),
    /// Closed-form measure weight w(t).
    Weight {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Beta-family parameter a > 0.
        #[arg(long)]
        a: Option<f64>,
        /// Gamma-Laguerre offset e0 >= 0.
        #[arg(long)]
        e0: Option<f64>,
        /// Evaluation point t.
        #[arg(long)]
        x: f64,
    },
}

#[derive(Args, Clone)]
struct RadiusArgs {
    #[arg(long = "a", num_args = 1)]
    a: Vec<f64>,
    #[arg(long = "b", num_args = 1)]
    b: Vec<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Exponential,
    Beta,
    GammaLaguerre,
}

#[derive(Args)]
struct CsArgs {
    #[arg(long = "a", num_args = 1)]
    a: Vec<f64>,
    #[arg(long = "b", num_args = 1)]
    b: Vec<f64>,
    #[arg(long = "z-re", default_value_t = 0.0)]
    z_re: f64,
    #[arg(long = "z-im", default_value_t = 0.0)]
    z_im: f64,
    /// Fock truncation order.
    #[arg(long, default_value_t = 64)]
    order: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ThermalArgs {
    #[arg(long, default_value_t = 0.0)]
    e0: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long = "x-min", default_value_t = 0.0)]
    x_min: f64,
    #[arg(long = "x-max")]
    x_max: f64,
    /// Number of grid rows (>= 2).
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum)]
    which: ThermalColumn,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ThermalColumn {
    /// Boltzmann-weighted normalization series over pFq; exact for every offset.
    HusimiRatio,
    /// Elementary closed form; exact only at e0 = 0.
    HusimiClosed,
    /// Diagonal P weight (1/nbar)·exp(-x/nbar).
    PFunction,
}

impl ThermalColumn {
    fn label(&self) -> &'static str {
        match self {
            Self::HusimiRatio => "husimi-ratio",
            Self::HusimiClosed => "husimi-closed",
            Self::PFunction => "p-function",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional JSON file supplying grids and tolerances.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the theta-series verification order.
    #[arg(long)]
    order: Option<usize>,
    /// Override the quadrature relative tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

/// Optional configuration file contents; any field may be omitted.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    rel_tol: Option<f64>,
    abs_tol: Option<f64>,
    max_subdivisions: Option<usize>,
    c_grid: Option<Vec<f64>>,
    s_grid: Option<Vec<f64>>,
    beta_grid: Option<Vec<f64>>,
    e0_grid: Option<Vec<f64>>,
    order: Option<usize>,
}

enum CliError {
    Usage(String),
    Numeric(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Numeric(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::InvalidParams(_)
            | CoreError::ConfigMismatch(_)
            | CoreError::Domain(_)
            | CoreError::OverflowGuard(_) => CliError::Usage(err.to_string()),
            _ => CliError::Numeric(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Usage(format!("i/o failure: {err}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Eval(args) => run_eval(args.kind),
        Command::Radius(args) => run_radius(&args),
        Command::Cs(args) => run_cs(&args),
        Command::Thermal(args) => run_thermal(&args),
        Command::Verify(args) => run_verify(&args),
    }
}

fn run_eval(kind: EvalKind) -> Result<ExitCode, CliError> {
    match kind {
        EvalKind::Pfq { a, b, x, tol } => {
            let params = HyperParams::new(a, b)?;
            let eval = pfq(&params, x, tol)?;
            println!("{}", eval.value);
            println!(
                "# terms_used={} tail_estimate={:e} near_radius={}",
                eval.terms_used, eval.tail_estimate, eval.near_radius
            );
            Ok(ExitCode::SUCCESS)
        }
        EvalKind::Radius(args) => run_radius(&args),
        EvalKind::Weight { family, a, e0, x } => {
            let family = build_family(family, a, e0)?;
            let value = family.eval(x)?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_family(
    kind: FamilyArg,
    a: Option<f64>,
    e0: Option<f64>,
) -> Result<WeightFamily, CliError> {
    match kind {
        FamilyArg::Exponential => Ok(WeightFamily::Exponential),
        FamilyArg::Beta => {
            let a = a.ok_or_else(|| CliError::Usage("beta family needs --a".into()))?;
            Ok(WeightFamily::beta(a)?)
        }
        FamilyArg::GammaLaguerre => {
            let e0 =
                e0.ok_or_else(|| CliError::Usage("gamma-laguerre family needs --e0".into()))?;
            Ok(WeightFamily::gamma_laguerre(e0)?)
        }
    }
}

fn run_radius(args: &RadiusArgs) -> Result<ExitCode, CliError> {
    let params = HyperParams::new(args.a.clone(), args.b.clone())?;
    match convergence_radius(&params)? {
        Radius::Infinite {
            reciprocal_ratio_probe,
        } => {
            println!("inf");
            println!("# reciprocal_ratio_probe={reciprocal_ratio_probe:e}");
        }
        Radius::Finite {
            value,
            last_delta,
            reciprocal_ratio_probe,
        } => {
            println!("{value}");
            println!(
                "# last_delta={last_delta:e} reciprocal_ratio_probe={reciprocal_ratio_probe:e}"
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_cs(args: &CsArgs) -> Result<ExitCode, CliError> {
    let params = HyperParams::new(args.a.clone(), args.b.clone())?;
    let z = Complex64::new(args.z_re, args.z_im);
    let cs = cs_amplitudes(&params, z, args.order)?;

    let mut body = String::new();
    match args.format {
        FormatArg::Csv => {
            body.push_str("n,amp_re,amp_im,prob\n");
            for (n, amp) in cs.amps().iter().enumerate() {
                body.push_str(&format!("{n},{},{},{}\n", amp.re, amp.im, amp.norm_sqr()));
            }
            body.push_str(&format!("# norm_defect={:e}", cs.norm_defect()));
            if cs.norm_defect() > 1e-12 {
                body.push_str(" exceeds 1e-12: increase --order");
            }
            body.push('\n');
        }
        FormatArg::Json => {
            let rows: Vec<serde_json::Value> = cs
                .amps()
                .iter()
                .enumerate()
                .map(|(n, amp)| {
                    serde_json::json!({
                        "n": n,
                        "re": amp.re,
                        "im": amp.im,
                        "prob": amp.norm_sqr(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "z_re": args.z_re,
                "z_im": args.z_im,
                "order": args.order,
                "norm_defect": cs.norm_defect(),
                "truncation_adequate": cs.norm_defect() <= 1e-12,
                "amps": rows,
            });
            body = serde_json::to_string_pretty(&doc).expect("json of plain values");
            body.push('\n');
        }
    }
    emit(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn run_thermal(args: &ThermalArgs) -> Result<ExitCode, CliError> {
    if args.steps < 2 {
        return Err(CliError::Usage(format!(
            "need at least 2 steps, got {}",
            args.steps
        )));
    }
    if args.x_max.is_nan() || args.x_min.is_nan() || args.x_max <= args.x_min {
        return Err(CliError::Usage(format!(
            "bad range: x-min={} x-max={}",
            args.x_min, args.x_max
        )));
    }
    let spectrum = ghgcs::coherent::SpectrumModel::linear(args.e0)?;
    let model = ThermalModel::new(args.beta, spectrum)?;
    let params = model.spectrum().equivalent_params();

    let mut body = String::new();
    body.push_str(&format!("# model e0={} beta={}\n", args.e0, args.beta));
    body.push_str(&format!("# column {}\n", args.which.label()));
    body.push_str("x,value\n");
    let span = args.x_max - args.x_min;
    for i in 0..args.steps {
        let x = args.x_min + span * i as f64 / (args.steps - 1) as f64;
        let value = match args.which {
            ThermalColumn::HusimiRatio => husimi_q_ratio(&model, &params, x, 1e-14)?,
            ThermalColumn::HusimiClosed => husimi_q_closed_linear(&model, x)?,
            ThermalColumn::PFunction => p_function_linear(&model, x)?,
        };
        body.push_str(&format!("{x},{value}\n"));
    }
    emit(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let kind = SuiteKind::parse(&args.suite)
        .ok_or_else(|| CliError::Usage(format!("unknown suite '{}'", args.suite)))?;
    let config = load_config(args)?;

    let report = run_suite(kind, &config)
        .with_timestamp(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    let body = match args.format {
        FormatArg::Json => {
            let mut json = report.to_json();
            json.push('\n');
            json
        }
        FormatArg::Csv => report.to_csv(),
    };
    emit(&args.out, &body)?;

    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        let failures: Vec<&str> = report
            .cases
            .iter()
            .filter(|c| c.status == ghgcs::report::CaseStatus::Fail)
            .map(|c| c.name.as_str())
            .collect();
        eprintln!("{} case(s) failed: {}", failures.len(), failures.join("; "));
        Ok(ExitCode::from(1))
    }
}

fn load_config(args: &VerifyArgs) -> Result<SuiteConfig, CliError> {
    let mut config = SuiteConfig::default();
    if let Some(path) = &args.config {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let file: FileConfig = serde_json::from_str(&raw)
            .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?;
        if let Some(v) = file.rel_tol {
            config.quad.rel_tol = v;
        }
        if let Some(v) = file.abs_tol {
            config.quad.abs_tol = v;
        }
        if let Some(v) = file.max_subdivisions {
            config.quad.max_subdivisions = v;
        }
        if let Some(v) = file.c_grid {
            config.c_grid = v;
        }
        if let Some(v) = file.s_grid {
            config.s_grid = v;
        }
        if let Some(v) = file.beta_grid {
            config.beta_grid = v;
        }
        if let Some(v) = file.e0_grid {
            config.e0_grid = v;
        }
        if let Some(v) = file.order {
            config.order = v;
        }
    }
    // Command-line flags override file values.
    if let Some(order) = args.order {
        config.order = order;
    }
    if let Some(tol) = args.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(CliError::Usage(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        config.quad = QuadratureSpec {
            rel_tol: tol,
            ..config.quad
        };
    }
    Ok(config)
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}
