//! Command-line interface: every library operation behind JSON-in/JSON-out
//! subcommands, plus a `demo` runner for the worked examples.
//!
//! Exit codes: 0 success, 1 usage error, 2 peel inconsistency, 3 infeasible
//! counts, 4 any other domain error.

mod demo;
mod schema;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use steklov::bounds::{
    bound_regime, euler_characteristic, sigma2_lens, BoundRegimeInput, CellComplex, ConformalFlag,
    LensParams,
};
use steklov::harmonic::{
    compare_dimension_tables, dtn_cone, dtn_disk, invariant_harmonic_dims_any,
    quotient_ball_spectrum_any, FourierDtn,
};
use steklov::inverse::{invert_view, InverseError};
use steklov::matgroup::GroupSpec;
use steklov::rational::{format_rat, parse_rat, rat_to_f64, Rat};
use steklov::spectra::{canonical_spectrum, enumerate, spectra_equal, BoundaryData, SpectrumView};
use steklov::sunada::{
    permutation_character_equal, sunada_condition, CollectionsSpec, FiniteGroupSpec,
    RealizationSpec, SubgroupCollection,
};

#[derive(Parser)]
#[command(
    name = "steklov",
    version,
    about = "Exact Steklov spectra of canonical orbisurfaces and ball quotients"
)]
struct Cli {
    /// Print the machine-readable I/O schema of a subcommand and exit.
    #[arg(long, value_name = "SUBCOMMAND")]
    schema: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical spectrum of boundary data, enumerated to n values.
    Spectrum(SpectrumArgs),
    /// Recover the boundary-data class from a spectrum view.
    Invert(InvertArgs),
    /// Decide equivalence of two boundary data.
    Equivalent(EquivalentArgs),
    /// Steklov spectrum of a finite quotient of a Euclidean ball.
    #[command(name = "quotient-ball")]
    QuotientBall(QuotientBallArgs),
    /// Dirichlet-to-Neumann tables of a cone and the unit disk.
    Cone(ConeArgs),
    /// Compare invariant harmonic dimensions of two groups.
    Isospectral(IsospectralArgs),
    /// Sunada condition, permutation characters and optional ball check.
    Sunada(SunadaArgs),
    /// Minimum L1 norm on a congruence lattice.
    #[command(name = "lens-sigma2")]
    LensSigma2(LensArgs),
    /// Sharpness table sigma2 = q^(1/m) for the lens family.
    Sharpness(SharpnessArgs),
    /// Orbifold Euler characteristic of a cell complex.
    Euler(EulerArgs),
    /// Regime classification of the two-dimensional upper bound.
    Regime(RegimeArgs),
    /// Reproduce the worked examples end to end.
    Demo(demo::DemoArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Boundary data JSON, inline or @file.
    #[arg(long)]
    boundary: String,
    /// Number of eigenvalues to enumerate.
    #[arg(long)]
    n: usize,
    /// Add approximate decimal renderings alongside the exact values.
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct InvertArgs {
    /// Spectrum view JSON file; stdin when omitted.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct EquivalentArgs {
    /// First boundary data JSON, inline or @file.
    #[arg(long)]
    a: String,
    /// Second boundary data JSON, inline or @file.
    #[arg(long)]
    b: String,
}

#[derive(Args)]
struct QuotientBallArgs {
    /// Group description JSON file.
    #[arg(long)]
    group: String,
    /// Ball radius as p/q.
    #[arg(long)]
    radius: String,
    /// Largest polynomial degree to include.
    #[arg(long = "max-degree")]
    max_degree: usize,
    /// Add approximate decimal renderings alongside the exact values.
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct ConeArgs {
    /// Cone order.
    #[arg(long)]
    k: u64,
    /// Largest Fourier mode to tabulate.
    #[arg(long)]
    modes: usize,
}

#[derive(Args)]
struct IsospectralArgs {
    #[arg(long)]
    group1: String,
    #[arg(long)]
    group2: String,
    #[arg(long = "max-degree")]
    max_degree: usize,
}

#[derive(Args)]
struct SunadaArgs {
    /// Finite group JSON file (multiplication table).
    #[arg(long)]
    group: String,
    /// Collections JSON file ({"H": [[...]], "K": [[...]]}).
    #[arg(long)]
    collections: String,
    /// Matrix realization JSON file; enables the ball check.
    #[arg(long = "matrix-group")]
    matrix_group: Option<String>,
    /// Degree cutoff for the ball check.
    #[arg(long = "max-degree", default_value_t = 30)]
    max_degree: usize,
}

#[derive(Args)]
struct LensArgs {
    #[arg(long)]
    q: u64,
    /// Comma-separated exponents, e.g. 1,3,9.
    #[arg(long)]
    p: String,
}

#[derive(Args)]
struct SharpnessArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    jmax: u64,
}

#[derive(Args)]
struct EulerArgs {
    /// Cell complex JSON file.
    #[arg(long)]
    cells: String,
}

#[derive(Args)]
struct RegimeArgs {
    /// Euler characteristic as p/q (may be negative).
    #[arg(long, allow_hyphen_values = true)]
    chi: String,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    s: u64,
    #[arg(long)]
    k: u64,
    #[arg(long = "A")]
    a: String,
    #[arg(long = "B")]
    b: String,
    /// Conformal-invariant flag attached to the report.
    #[arg(long, default_value = "unspecified")]
    conformal: String,
}

/// Domain failure with its documented exit code.
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn domain(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }

    pub fn failed_demo(message: impl Into<String>) -> Self {
        CliError {
            code: 5,
            message: message.into(),
        }
    }
}

impl From<InverseError> for CliError {
    fn from(err: InverseError) -> Self {
        let code = match &err {
            InverseError::PeelInconsistency { .. } | InverseError::ReenumerationMismatch => 2,
            InverseError::InfeasibleCounts { .. } => 3,
            _ => 4,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

macro_rules! from_domain_error {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::domain(err.to_string())
            }
        }
    )*};
}
from_domain_error!(
    steklov::spectra::SpectraError,
    steklov::matgroup::GroupError,
    steklov::sunada::SunadaError,
    steklov::bounds::BoundsError,
);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    if let Some(name) = cli.schema {
        return match schema::print_schema(&name) {
            Ok(()) => ExitCode::SUCCESS,
            Err(message) => {
                eprintln!("{message}");
                ExitCode::from(1)
            }
        };
    }

    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required; see --help");
        return ExitCode::from(1);
    };

    match run(command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Invert(args) => cmd_invert(args),
        Command::Equivalent(args) => cmd_equivalent(args),
        Command::QuotientBall(args) => cmd_quotient_ball(args),
        Command::Cone(args) => cmd_cone(args),
        Command::Isospectral(args) => cmd_isospectral(args),
        Command::Sunada(args) => cmd_sunada(args),
        Command::LensSigma2(args) => cmd_lens(args),
        Command::Sharpness(args) => cmd_sharpness(args),
        Command::Euler(args) => cmd_euler(args),
        Command::Regime(args) => cmd_regime(args),
        Command::Demo(args) => demo::run(args),
    }
}

/// Inline JSON, or the contents of a file when the argument starts with `@`.
fn read_json_arg(arg: &str) -> Result<String, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| CliError::domain(format!("cannot read {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::domain(format!("cannot read {path}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::domain(format!("invalid {what} JSON: {e}")))
}

fn emit<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::domain(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn parse_rat_arg(text: &str, what: &str) -> Result<Rat, CliError> {
    parse_rat(text).map_err(|e| CliError::domain(format!("invalid {what}: {e}")))
}

#[derive(Serialize)]
struct ViewOutput {
    #[serde(flatten)]
    view: SpectrumView,
    /// Decimal renderings, approximate, for human reading only.
    #[serde(skip_serializing_if = "Option::is_none")]
    approximate_values: Option<Vec<f64>>,
}

fn view_output(view: SpectrumView, float: bool) -> ViewOutput {
    let approximate_values =
        float.then(|| view.values().iter().map(rat_to_f64).collect::<Vec<f64>>());
    ViewOutput {
        view,
        approximate_values,
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let text = read_json_arg(&args.boundary)?;
    let bd: BoundaryData = parse_json(&text, "boundary data")?;
    let spectrum = canonical_spectrum(&bd);
    let view = enumerate(&spectrum, args.n)?;
    emit(&view_output(view, args.float))
}

fn cmd_invert(args: InvertArgs) -> Result<(), CliError> {
    let text = match &args.input {
        Some(path) => read_file(path)?,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| CliError::domain(format!("cannot read stdin: {e}")))?;
            buffer
        }
    };
    let view: SpectrumView = parse_json(&text, "spectrum view")?;
    let report = invert_view(&view)?;
    emit(&report)
}

fn cmd_equivalent(args: EquivalentArgs) -> Result<(), CliError> {
    let a: BoundaryData = parse_json(&read_json_arg(&args.a)?, "boundary data a")?;
    let b: BoundaryData = parse_json(&read_json_arg(&args.b)?, "boundary data b")?;
    #[derive(Serialize)]
    struct Output {
        equivalent: bool,
        spectra_equal: bool,
    }
    emit(&Output {
        equivalent: steklov::inverse::data_equivalent(&a, &b),
        spectra_equal: spectra_equal(&canonical_spectrum(&a), &canonical_spectrum(&b))?,
    })
}

fn load_group(path: &str) -> Result<steklov::matgroup::AnyGroup, CliError> {
    let spec: GroupSpec = parse_json(&read_file(path)?, "group spec")?;
    Ok(spec.build()?)
}

fn cmd_quotient_ball(args: QuotientBallArgs) -> Result<(), CliError> {
    let group = load_group(&args.group)?;
    let radius = parse_rat_arg(&args.radius, "radius")?;
    let view = quotient_ball_spectrum_any(&group, &radius, args.max_degree)?;
    emit(&view_output(view, args.float))
}

fn cmd_cone(args: ConeArgs) -> Result<(), CliError> {
    let cone = dtn_cone(args.k, args.modes)?;
    let disk = dtn_disk(&steklov::rational::rat_int(1), args.modes)?;
    let identical = cone.eigenvalues() == disk.eigenvalues();
    #[derive(Serialize)]
    struct Output {
        cone: FourierDtn,
        unit_disk: FourierDtn,
        verdict: &'static str,
    }
    emit(&Output {
        cone,
        unit_disk: disk,
        verdict: if identical { "IDENTICAL" } else { "DIFFERENT" },
    })
}

fn cmd_isospectral(args: IsospectralArgs) -> Result<(), CliError> {
    let group1 = load_group(&args.group1)?;
    let group2 = load_group(&args.group2)?;
    if group1.dim() != group2.dim() {
        return Err(CliError::domain(format!(
            "ambient dimensions differ: {} vs {}",
            group1.dim(),
            group2.dim()
        )));
    }
    let table1 = invariant_harmonic_dims_any(&group1, args.max_degree)?;
    let table2 = invariant_harmonic_dims_any(&group2, args.max_degree)?;
    emit(&compare_dimension_tables(&table1, &table2))
}

fn cmd_sunada(args: SunadaArgs) -> Result<(), CliError> {
    let group_spec: FiniteGroupSpec = parse_json(&read_file(&args.group)?, "finite group")?;
    let group = group_spec.build()?;
    let collections: CollectionsSpec = parse_json(&read_file(&args.collections)?, "collections")?;
    let h = SubgroupCollection::new(&group, collections.h)?;
    let k = SubgroupCollection::new(&group, collections.k)?;

    let condition = sunada_condition(&group, &h, &k)?;
    let characters = permutation_character_equal(&group, &h, &k)?;
    let ball_check = match &args.matrix_group {
        Some(path) => {
            let spec: RealizationSpec = parse_json(&read_file(path)?, "matrix realization")?;
            let realization = spec.build(&group)?;
            Some(realization.ball_check(&h, &k, args.max_degree)?)
        }
        None => None,
    };

    #[derive(Serialize)]
    struct Output {
        condition: steklov::sunada::SunadaReport,
        characters: steklov::sunada::CharacterReport,
        #[serde(skip_serializing_if = "Option::is_none")]
        ball_check: Option<steklov::sunada::BallCheckReport>,
    }
    emit(&Output {
        condition,
        characters,
        ball_check,
    })
}

fn cmd_lens(args: LensArgs) -> Result<(), CliError> {
    let p: Vec<i64> = args
        .p
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| CliError::domain(format!("invalid p component `{part}`: {e}")))
        })
        .collect::<Result<_, _>>()?;
    let params = LensParams::new(args.q, p)?;
    let result = sigma2_lens(&params);
    #[derive(Serialize)]
    struct Output {
        sigma2: u64,
        witness: Vec<i64>,
        trivial_lattice: bool,
    }
    emit(&Output {
        sigma2: result.sigma2,
        witness: result.witness,
        trivial_lattice: params.is_trivial_lattice(),
    })
}

fn cmd_sharpness(args: SharpnessArgs) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Row {
        j: u64,
        q: u64,
        sigma2: u64,
        sharp: bool,
    }
    let mut rows = Vec::new();
    for j in 2..=args.jmax {
        let q = j
            .checked_pow(args.m as u32)
            .ok_or_else(|| CliError::domain("q = j^m overflows"))?;
        let mut p = Vec::with_capacity(args.m);
        let mut power = 1u64;
        for _ in 0..args.m {
            p.push(power as i64);
            power = power.saturating_mul(j);
        }
        let result = sigma2_lens(&LensParams::new(q, p)?);
        rows.push(Row {
            j,
            q,
            sigma2: result.sigma2,
            sharp: result.sigma2 == j,
        });
    }
    #[derive(Serialize)]
    struct Output {
        m: usize,
        rows: Vec<Row>,
    }
    emit(&Output { m: args.m, rows })
}

fn cmd_euler(args: EulerArgs) -> Result<(), CliError> {
    let complex: CellComplex = parse_json(&read_file(&args.cells)?, "cell complex")?;
    let chi = euler_characteristic(&complex);
    #[derive(Serialize)]
    struct Output {
        chi: String,
        cells: usize,
    }
    emit(&Output {
        chi: format_rat(&chi),
        cells: complex.cells().len(),
    })
}

fn parse_conformal(text: &str) -> Result<ConformalFlag, CliError> {
    match text {
        "zero" => Ok(ConformalFlag::Zero),
        "positive_unknown" => Ok(ConformalFlag::PositiveUnknown),
        "unspecified" => Ok(ConformalFlag::Unspecified),
        other => Err(CliError::domain(format!(
            "invalid conformal flag `{other}`; expected zero, positive_unknown or unspecified"
        ))),
    }
}

fn cmd_regime(args: RegimeArgs) -> Result<(), CliError> {
    let input = BoundRegimeInput {
        chi: parse_rat_arg(&args.chi, "chi")?,
        r: args.r,
        s: args.s,
    };
    let a = parse_rat_arg(&args.a, "A")?;
    let b = parse_rat_arg(&args.b, "B")?;
    let conformal = parse_conformal(&args.conformal)?;
    let report = bound_regime(&input, args.k, &a, &b, conformal)?;
    emit(&report)
}
