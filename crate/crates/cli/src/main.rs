//! Command-line surface for the DSR-deformed Klein-Gordon oscillator.
//!
//! Emits deterministic CSV/TSV: fixed 9-significant-digit scientific
//! formatting, `\n` line endings, `#`-prefixed header comments echoing the
//! full configuration. Exit codes: 0 success, 1 verification failure,
//! 2 usage/config error, 3 domain/model error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dsr_osc_core::kinematics::{
    casimir_residual, deformed_map, Covector, GeometryKind, ModelParams, TwoMomentum,
};
use dsr_osc_core::special_functions::{phi, psi_shifted, DeformationShifts, WavefunctionSample};
use dsr_osc_core::spectra::{energy_branches, shift_table};
use dsr_osc_core::verification::{
    shift_stress, suite_branch_identities, suite_eta_structure, suite_grid_residual,
    suite_isospectral, suite_ms_ratio, SuiteReport,
};
use dsr_osc_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "dsr-osc",
    version,
    about = "Klein-Gordon oscillator spectra under linear-fractional DSR deformations",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Both energy branches per level and geometry
    Spectrum(SpectrumArgs),
    /// Positive-branch energy shifts relative to SR
    Shifts(ShiftsArgs),
    /// Sampled stationary eigenfunction on a position grid
    Wavefunction(WavefunctionArgs),
    /// Nonlinear momentum map and mass-shell residuals at one momentum
    Map(MapArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct ModelArgs {
    /// Oscillator ratio Omega = omega/m
    #[arg(long, default_value_t = 0.10)]
    omega: f64,
    /// Deformation ratio eps = m/E_p (0 for the undeformed limit)
    #[arg(long, default_value_t = 0.20)]
    eps: f64,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format: csv or tsv (default from DSR_OSC_DEFAULT_FORMAT, else csv)
    #[arg(long)]
    format: Option<String>,
    /// Write output to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Highest level index
    #[arg(long, default_value_t = 25)]
    nmax: u32,
    /// Comma-separated geometry selectors among sr,tl,sl,ll,ms
    #[arg(long, default_value = "sr,tl,sl,ll,ms")]
    geometries: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ShiftsArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 25)]
    nmax: u32,
    #[arg(long, default_value = "sr,tl,sl,ll,ms")]
    geometries: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Geometry: sr, tl, sl or ll (ms has no wavefunction sector here)
    #[arg(long, default_value = "sl")]
    geometry: String,
    /// Level index (<= 64)
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    xmin: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    xmax: f64,
    /// Number of grid points (2..=100000)
    #[arg(long, default_value_t = 2001)]
    points: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Energy component E/m
    #[arg(long, allow_hyphen_values = true)]
    energy: f64,
    /// Momentum component p/m
    #[arg(long, allow_hyphen_values = true)]
    momentum: f64,
    /// Covector class of the map: tl, sl or ll
    #[arg(long, default_value = "tl")]
    covector: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Suite: isospectral, grid, branches, msratio, eta or all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Truncated basis dimension
    #[arg(long, default_value_t = 128)]
    basis: usize,
    /// Level range for the branch-identity suite
    #[arg(long, default_value_t = 25)]
    nmax: u32,
    /// Comma-separated eps sweep for the msratio suite
    #[arg(long, default_value = "2e-1,1e-1,1e-2,1e-3,1e-4")]
    eps_list: String,
    /// Geometry selectors (used for the MS-degeneracy precheck)
    #[arg(long, default_value = "sr,tl,sl,ll,ms")]
    geometries: String,
    /// Tolerance for the isospectral and eta suites
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Write the CSV check report to this path
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Process failure with its contractual exit code.
enum Failure {
    /// exit 2: bad flags, bad config values, I/O trouble
    Config(String),
    /// exit 3: domain or model error from the physics core
    Domain(String),
    /// exit 1: a verification suite failed
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Config(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::DomainViolation { .. }
            | CoreError::MsPole
            | CoreError::MsDegenerate { .. }
            | CoreError::NegativeDiscriminant
            | CoreError::WrongGeometry { .. }
            | CoreError::RangeOverflow { .. } => Failure::Domain(e.to_string()),
            other => Failure::Config(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Config(format!("i/o error: {e}"))
    }
}

/// 9-significant-digit scientific rendering used for every float column.
fn fmt_f(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.8e}")
    }
}

fn resolve_separator(output: &OutputArgs) -> Result<char, Failure> {
    let name = match &output.format {
        Some(f) => f.clone(),
        None => match std::env::var("DSR_OSC_DEFAULT_FORMAT") {
            Ok(v) => v,
            Err(std::env::VarError::NotPresent) => "csv".to_string(),
            Err(e) => return Err(Failure::Config(format!("DSR_OSC_DEFAULT_FORMAT: {e}"))),
        },
    };
    match name.to_ascii_lowercase().as_str() {
        "csv" => Ok(','),
        "tsv" => Ok('\t'),
        other => Err(Failure::Config(format!(
            "unknown format '{other}' (expected csv or tsv)"
        ))),
    }
}

fn format_name(sep: char) -> &'static str {
    if sep == '\t' {
        "tsv"
    } else {
        "csv"
    }
}

fn parse_geometries(selector: &str) -> Result<Vec<GeometryKind>, Failure> {
    let mut selected = Vec::new();
    for token in selector.split(',') {
        let g = GeometryKind::parse(token).map_err(|e| Failure::Config(e.to_string()))?;
        if !selected.contains(&g) {
            selected.push(g);
        }
    }
    if selected.is_empty() {
        return Err(Failure::Config("no geometries selected".into()));
    }
    // emit in enum order regardless of the order given
    Ok(GeometryKind::ALL
        .into_iter()
        .filter(|g| selected.contains(g))
        .collect())
}

fn model_params(model: &ModelArgs) -> Result<ModelParams, Failure> {
    ModelParams::dimensionless(model.omega, model.eps).map_err(|e| Failure::Config(e.to_string()))
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(body.as_bytes())?;
        }
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
        }
    }
    Ok(())
}

fn join_row(fields: &[String], sep: char) -> String {
    fields.join(&sep.to_string())
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), Failure> {
    let params = model_params(&args.model)?;
    let geometries = parse_geometries(&args.geometries)?;
    let sep = resolve_separator(&args.output)?;
    let mut body = String::new();
    body.push_str("# dsr-osc spectrum\n");
    body.push_str(&format!("# omega = {}\n", fmt_f(args.model.omega)));
    body.push_str(&format!("# eps = {}\n", fmt_f(args.model.eps)));
    body.push_str(&format!("# nmax = {}\n", args.nmax));
    body.push_str(&format!(
        "# geometries = {}\n",
        geometries
            .iter()
            .map(|g| g.label())
            .collect::<Vec<_>>()
            .join(",")
    ));
    body.push_str(&format!("# format = {}\n", format_name(sep)));
    body.push_str(&join_row(
        &["n", "geometry", "e_plus", "e_minus", "admissible"].map(String::from),
        sep,
    ));
    body.push('\n');
    for n in 0..=args.nmax {
        for &geometry in &geometries {
            let b = energy_branches(geometry, n, &params)?;
            body.push_str(&join_row(
                &[
                    n.to_string(),
                    geometry.label().to_string(),
                    fmt_f(b.e_plus),
                    fmt_f(b.e_minus),
                    b.admissible.to_string(),
                ],
                sep,
            ));
            body.push('\n');
        }
    }
    emit(&args.output.out, &body)
}

fn cmd_shifts(args: ShiftsArgs) -> Result<(), Failure> {
    let params = model_params(&args.model)?;
    let geometries = parse_geometries(&args.geometries)?;
    let sep = resolve_separator(&args.output)?;
    let table = shift_table(&params, args.nmax)?;
    let mut body = String::new();
    body.push_str("# dsr-osc shifts\n");
    body.push_str(&format!("# omega = {}\n", fmt_f(args.model.omega)));
    body.push_str(&format!("# eps = {}\n", fmt_f(args.model.eps)));
    body.push_str(&format!("# nmax = {}\n", args.nmax));
    body.push_str(&format!(
        "# geometries = {}\n",
        geometries
            .iter()
            .map(|g| g.label())
            .collect::<Vec<_>>()
            .join(",")
    ));
    body.push_str(&format!("# format = {}\n", format_name(sep)));
    body.push_str(&join_row(
        &["n", "geometry", "delta_e_plus", "leading_order"].map(String::from),
        sep,
    ));
    body.push('\n');
    for row in table.iter().filter(|r| geometries.contains(&r.geometry)) {
        body.push_str(&join_row(
            &[
                row.n.to_string(),
                row.geometry.label().to_string(),
                fmt_f(row.delta_e_plus),
                fmt_f(row.leading),
            ],
            sep,
        ));
        body.push('\n');
    }
    emit(&args.output.out, &body)
}

fn cmd_wavefunction(args: WavefunctionArgs) -> Result<(), Failure> {
    let params = model_params(&args.model)?;
    let geometry =
        GeometryKind::parse(&args.geometry).map_err(|e| Failure::Config(e.to_string()))?;
    if geometry == GeometryKind::MagueijoSmolin {
        return Err(Failure::Domain(
            CoreError::WrongGeometry {
                expected: "sr, tl, sl or ll",
                got: geometry,
            }
            .to_string(),
        ));
    }
    if args.n > 64 {
        return Err(Failure::Config(format!(
            "level index {} above the wavefunction cap 64",
            args.n
        )));
    }
    if args.points < 2 || args.points > 100_000 {
        return Err(Failure::Config(format!(
            "points = {} outside 2..=100000",
            args.points
        )));
    }
    if args.xmax.is_nan() || args.xmin.is_nan() || args.xmax <= args.xmin {
        return Err(Failure::Config(format!(
            "empty grid range [{}, {}]",
            args.xmin, args.xmax
        )));
    }
    let sep = resolve_separator(&args.output)?;
    let h = (args.xmax - args.xmin) / (args.points - 1) as f64;
    let mut samples: Vec<WavefunctionSample> = Vec::with_capacity(args.points);
    for i in 0..args.points {
        let x = args.xmin + h * i as f64;
        let value = match geometry {
            // the timelike deformation changes energies only; sr/tl keep the
            // real Hermite-Gaussian
            GeometryKind::Sr | GeometryKind::Timelike => {
                dsr_osc_core::Complex64::new(phi(args.n as usize, x, &params)?, 0.0)
            }
            _ => psi_shifted(geometry, args.n as usize, x, &params)?,
        };
        samples.push(WavefunctionSample { x, value });
    }
    // trapezoid integral of |psi|^2 over the emitted grid; the shifted states
    // are eta-normalized, not L2-normalized, so this is not 1 in general
    let abs2: Vec<f64> = samples.iter().map(|s| s.value.norm_sqr()).collect();
    let mut integral = 0.0;
    for i in 1..args.points {
        integral += 0.5 * h * (abs2[i - 1] + abs2[i]);
    }
    let mut body = String::new();
    body.push_str("# dsr-osc wavefunction\n");
    body.push_str(&format!("# omega = {}\n", fmt_f(args.model.omega)));
    body.push_str(&format!("# eps = {}\n", fmt_f(args.model.eps)));
    body.push_str(&format!("# geometry = {}\n", geometry.label()));
    body.push_str(&format!("# n = {}\n", args.n));
    body.push_str(&format!(
        "# grid = [{}, {}] with {} points\n",
        fmt_f(args.xmin),
        fmt_f(args.xmax),
        args.points
    ));
    body.push_str(&format!("# abs2_trapezoid = {}\n", fmt_f(integral)));
    body.push_str(&format!("# format = {}\n", format_name(sep)));
    body.push_str(&join_row(&["x", "re", "im", "abs2"].map(String::from), sep));
    body.push('\n');
    for (i, s) in samples.iter().enumerate() {
        body.push_str(&join_row(
            &[fmt_f(s.x), fmt_f(s.value.re), fmt_f(s.value.im), fmt_f(abs2[i])],
            sep,
        ));
        body.push('\n');
    }
    emit(&args.output.out, &body)
}

fn cmd_map(args: MapArgs) -> Result<(), Failure> {
    let params = model_params(&args.model)?;
    let covector = match args.covector.trim().to_ascii_lowercase().as_str() {
        "tl" | "timelike" => Covector::timelike(),
        "sl" | "spacelike" => Covector::spacelike(),
        "ll" | "lightlike" => Covector::lightlike(),
        other => {
            return Err(Failure::Config(format!(
                "unknown covector '{other}' (expected tl, sl or ll)"
            )))
        }
    };
    let sep = resolve_separator(&args.output)?;
    let momentum = TwoMomentum::new(args.energy, args.momentum);
    let pi = deformed_map(momentum, covector, &params)?;
    let class = covector.classify().map_err(Failure::from)?;
    let adp = match class {
        dsr_osc_core::CausalClass::Timelike => -args.energy,
        dsr_osc_core::CausalClass::Spacelike => -args.momentum,
        dsr_osc_core::CausalClass::Lightlike => -(args.energy + args.momentum),
    };
    let denominator = 1.0 + params.eps() * adp;
    // residuals for every geometry; out-of-domain ones render as nan
    let residuals: Vec<String> = GeometryKind::ALL
        .iter()
        .map(|&g| match casimir_residual(momentum, g, &params) {
            Ok(r) => fmt_f(r),
            Err(_) => "nan".to_string(),
        })
        .collect();
    let mut body = String::new();
    body.push_str("# dsr-osc map\n");
    body.push_str(&format!("# omega = {}\n", fmt_f(args.model.omega)));
    body.push_str(&format!("# eps = {}\n", fmt_f(args.model.eps)));
    body.push_str(&format!("# covector = {}\n", args.covector.trim()));
    body.push_str(&format!("# format = {}\n", format_name(sep)));
    body.push_str(&join_row(
        &[
            "energy",
            "momentum",
            "denominator",
            "pi_energy",
            "pi_momentum",
            "res_sr",
            "res_tl",
            "res_sl",
            "res_ll",
            "res_ms",
        ]
        .map(String::from),
        sep,
    ));
    body.push('\n');
    let mut fields = vec![
        fmt_f(args.energy),
        fmt_f(args.momentum),
        fmt_f(denominator),
        fmt_f(pi.energy),
        fmt_f(pi.momentum),
    ];
    fields.extend(residuals);
    body.push_str(&join_row(&fields, sep));
    body.push('\n');
    emit(&args.output.out, &body)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let params = model_params(&args.model)?;
    let geometries = parse_geometries(&args.geometries)?;
    let suites: Vec<&str> = match args.suite.as_str() {
        "all" => vec!["isospectral", "grid", "branches", "msratio", "eta"],
        s @ ("isospectral" | "grid" | "branches" | "msratio" | "eta") => vec![s],
        other => {
            return Err(Failure::Config(format!(
                "unknown suite '{other}' (expected isospectral, grid, branches, msratio, eta or all)"
            )))
        }
    };
    // the MS sectors degenerate at eps >= 1: refuse before running anything
    let touches_ms = suites.iter().any(|s| matches!(*s, "branches" | "msratio"));
    if touches_ms && geometries.contains(&GeometryKind::MagueijoSmolin) {
        params.require_ms_valid().map_err(Failure::from)?;
    }
    if args.basis < 2 {
        return Err(Failure::Config(format!("basis {} too small", args.basis)));
    }
    if shift_stress(&params) {
        let shifts = DeformationShifts::from_params(&params);
        eprintln!(
            "warning: delta*sqrt(m*omega) = {:.3} exceeds {}; similarity-route checks run as \
             non-gated diagnostics, consider a larger --basis",
            shifts.delta * params.m_omega().sqrt(),
            dsr_osc_core::verification::SHIFT_STRESS_LIMIT
        );
    }
    let eps_list: Vec<f64> = args
        .eps_list
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Failure::Config(format!("bad eps-list entry '{t}': {e}")))
        })
        .collect::<Result<_, _>>()?;

    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in &suites {
        match *suite {
            "isospectral" => {
                let n_check = (args.nmax as usize).min(args.basis / 2);
                reports.push(suite_isospectral(&params, args.basis, n_check, args.tol)?);
            }
            "grid" => {
                let l = 8.0 / params.m_omega().sqrt();
                for geometry in [GeometryKind::Spacelike, GeometryKind::Lightlike] {
                    for n in 0..=3u32 {
                        reports.push(suite_grid_residual(geometry, n, &params, (-l, l), 4001)?);
                    }
                }
            }
            "branches" => reports.push(suite_branch_identities(&params, args.nmax)?),
            "msratio" => reports.push(suite_ms_ratio(&eps_list, &params)?),
            "eta" => reports.push(suite_eta_structure(&params, args.basis, 8, args.tol)?),
            _ => unreachable!(),
        }
    }

    let mut text = String::new();
    for report in &reports {
        for line in report.text_lines() {
            text.push_str(&line);
            text.push('\n');
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    text.push_str(&format!(
        "verify: {passed}/{} suites passed\n",
        reports.len()
    ));
    std::io::stdout().write_all(text.as_bytes())?;

    if let Some(path) = &args.out {
        let mut csv = String::from("suite,check,residual,tolerance,pass\n");
        for report in &reports {
            for row in report.csv_rows(',') {
                csv.push_str(&row);
                csv.push('\n');
            }
        }
        let mut f = std::fs::File::create(path)?;
        f.write_all(csv.as_bytes())?;
    }

    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Shifts(args) => cmd_shifts(args),
        Command::Wavefunction(args) => cmd_wavefunction(args),
        Command::Map(args) => cmd_map(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Config(msg) => eprintln!("error: {msg}"),
                Failure::Domain(msg) => eprintln!("error: {msg}"),
                Failure::Verification => eprintln!("error: verification failed"),
            }
            ExitCode::from(failure.code())
        }
    }
}
