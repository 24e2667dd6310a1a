//! Command-line harness for character-combination sequence experiments.
//!
//! Subcommands:
//! - `figure`: regenerate one of the five bundled datasets as CSV;
//! - `pair`: full correlation report for one sequence pair at one prime;
//! - `verify`: run every built-in verification suite;
//! - `constants`: print the named limiting constants.
//!
//! Exit codes: 0 on success, 1 when verification or computation fails,
//! 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use charcorr::asymptotics::{
    appended_limit_coefficients, optimum_constants, psc_limit_appended, psc_limit_natural,
};
use charcorr::checks::run_all;
use charcorr::correlation::{mean_square_periodic, merit_report, ratio_to_f64};
use charcorr::figures::{
    fractional_length_rows, quartic_legendre_rows, quartic_pair_rows, FractionalLengthRow,
    MixedPairRow, ParameterChoice, QuarticPairRow,
};
use charcorr::pair_params::{parameters_from_combinations, standard_family_parameters};
use charcorr::sequences::{combination_coefficients, FamilyKind};
use charcorr::{format_significant, PairParameters, PrimeField};

#[derive(Parser)]
#[command(
    name = "charcorr",
    version,
    about = "Binary sequences from multiplicative characters of prime fields: \
             correlation experiments, verification, and limiting constants",
    long_about = "Builds binary sequences from residue classes of prime fields (the \
                  quartic-character pair f/g and the quadratic-character sequence h), \
                  measures their exact aperiodic correlation figures of merit, and \
                  compares them with the limiting formulas.\n\n\
                  Datasets and reports are deterministic: the same invocation always \
                  produces byte-identical output."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate one of the five bundled datasets as CSV
    #[command(
        long_about = "Regenerates one dataset as UTF-8 CSV (header row, LF line endings, \
                      floats at 9 significant digits), sorted by ascending prime.\n\n\
                      The prime-sweep datasets (aaron, edward, boris, edith) cover primes \
                      p ≡ 1 (mod 4) with 13 ≤ p < pmax. The smallest included prime is 13: \
                      at p = 5 the appended parameters round to degenerate windows (length \
                      round(5·Λ) = 5 with shift 1, a fully periodic window reused across \
                      datasets would not be comparable), so the sweep starts at the next \
                      admissible prime. The fractional-length sweep (cecilia) instead uses \
                      a fixed list of 100 primes and ignores --pmax.\n\n\
                      Every asymptote column is recomputed from the limit formulas on the \
                      fly, never hard-coded."
    )]
    Figure(FigureArgs),
    /// Correlation report for one sequence pair at one prime
    #[command(
        long_about = "Builds the two requested sequences at one prime, unimodularizes them \
                      (zero terms replaced by +1), and prints their exact correlation \
                      figures of merit, the pair parameters along two independent routes \
                      (the defining Gauss-sum sums and the closed-form family table), and \
                      the periodic mean-square bridge residual between the measured \
                      full-period correlation and the parameter prediction.\n\n\
                      Parameter selection: --natural (default) uses shift round(p/4) and \
                      length p; --appended uses shift round(p(3−2Λ)/4) and length \
                      round(pΛ) at the optimal length ratio Λ = 1.057827…; or give an \
                      explicit window with --shift and --length."
    )]
    Pair(PairArgs),
    /// Run every built-in verification suite
    #[command(
        long_about = "Runs the full verification suite: every mathematical identity the \
                      library relies on, evaluated over fixed input grids (field tables, \
                      character sums, Gauss-sum laws, correlation symmetries, periodic \
                      bridges, limit-formula specializations, sampled bounds, and the \
                      transform-kernel equivalence). Prints one line per suite and a \
                      summary; exits with status 1 if any suite fails. Output is \
                      byte-identical run to run."
    )]
    Verify,
    /// Print the named limiting constants
    #[command(
        long_about = "Prints the limiting constants of the correlation tradeoff: the \
                      least achievable limiting autocorrelation demerit factor and its \
                      reciprocal, the length ratio attaining them, the limiting \
                      Pursley–Sarwate criterion at both parameter choices, and the \
                      constant/cosine split of the appended-parameter limits."
    )]
    Constants,
}

#[derive(Args)]
struct FigureArgs {
    /// Dataset to regenerate
    #[arg(value_enum)]
    name: FigureName,
    /// Largest prime, exclusive (prime-sweep datasets only; must be ≥ 13)
    #[arg(long, default_value_t = 2000)]
    pmax: u64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for the per-prime fan-out (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Copy, Clone, ValueEnum)]
enum FigureName {
    /// Natural length: quartic pair demerit factors vs cos(2γ_p)
    Aaron,
    /// Natural length: quartic/quadratic mixed pair vs cos(2γ_p)
    Edward,
    /// Appended length: quartic pair demerit factors vs cos(2γ_p)
    Boris,
    /// Appended length: quartic/quadratic mixed pair vs cos(2γ_p)
    Edith,
    /// Fractional-length sweep: crosscorrelation vs length ratio k/10
    Cecilia,
}

#[derive(Args)]
struct PairArgs {
    /// Prime modulus (odd; quartic kinds need p ≡ 1 mod 4)
    #[arg(long)]
    p: u64,
    /// Left sequence family
    #[arg(long, value_enum)]
    left: Family,
    /// Right sequence family
    #[arg(long, value_enum)]
    right: Family,
    /// Shift round(p/4), length p (the default)
    #[arg(long, conflicts_with_all = ["appended", "shift", "length"])]
    natural: bool,
    /// Shift round(p(3−2Λ)/4), length round(pΛ) at the optimal Λ
    #[arg(long, conflicts_with_all = ["shift", "length"])]
    appended: bool,
    /// Explicit window start (requires --length)
    #[arg(long, requires = "length", allow_negative_numbers = true)]
    shift: Option<i64>,
    /// Explicit window length ≥ 1 (requires --shift)
    #[arg(long, requires = "shift")]
    length: Option<usize>,
    /// Emit the report as JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    /// Quartic residue classes {0, 1}
    F,
    /// Quartic residue classes {0, 3}
    G,
    /// Quadratic residues (Legendre)
    H,
}

impl Family {
    fn kind(self) -> FamilyKind {
        match self {
            Family::F => FamilyKind::QuarticF,
            Family::G => FamilyKind::QuarticG,
            Family::H => FamilyKind::LegendreH,
        }
    }
}

/// Errors mapped to process exit codes.
enum CliError {
    /// Invalid input (exit 2).
    Usage(String),
    /// Computation or I/O failure (exit 1).
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Figure(args) => run_figure(args),
        Command::Pair(args) => run_pair(args),
        Command::Verify => return run_verify(),
        Command::Constants => run_constants(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn run_figure(args: FigureArgs) -> Result<(), CliError> {
    if args.pmax < 13 {
        return Err(CliError::Usage(format!(
            "--pmax must be at least 13 (got {}): the prime sweeps start at 13",
            args.pmax
        )));
    }
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Failure(format!("thread pool: {e}")))?;
    }
    let csv = match args.name {
        FigureName::Aaron => {
            quartic_pair_csv(quartic_pair_rows(args.pmax, ParameterChoice::Natural))?
        }
        FigureName::Boris => {
            quartic_pair_csv(quartic_pair_rows(args.pmax, ParameterChoice::Appended))?
        }
        FigureName::Edward => {
            mixed_pair_csv(quartic_legendre_rows(args.pmax, ParameterChoice::Natural))?
        }
        FigureName::Edith => {
            mixed_pair_csv(quartic_legendre_rows(args.pmax, ParameterChoice::Appended))?
        }
        FigureName::Cecilia => fractional_csv(fractional_length_rows(100))?,
    };
    match args.out {
        Some(path) => std::fs::write(&path, csv)
            .map_err(|e| CliError::Failure(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn quartic_pair_csv(rows: charcorr::Result<Vec<QuarticPairRow>>) -> Result<String, CliError> {
    let rows = rows.map_err(|e| CliError::Failure(e.to_string()))?;
    write_csv(&QuarticPairRow::HEADER, rows.iter().map(|r| r.record()))
}

fn mixed_pair_csv(rows: charcorr::Result<Vec<MixedPairRow>>) -> Result<String, CliError> {
    let rows = rows.map_err(|e| CliError::Failure(e.to_string()))?;
    write_csv(&MixedPairRow::HEADER, rows.iter().map(|r| r.record()))
}

fn fractional_csv(rows: charcorr::Result<Vec<FractionalLengthRow>>) -> Result<String, CliError> {
    let rows = rows.map_err(|e| CliError::Failure(e.to_string()))?;
    write_csv(&FractionalLengthRow::HEADER, rows.iter().map(|r| r.record()))
}

fn write_csv(
    header: &[&str],
    records: impl Iterator<Item = Vec<String>>,
) -> Result<String, CliError> {
    let fail = |e: csv::Error| CliError::Failure(format!("csv: {e}"));
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(header).map_err(fail)?;
    for record in records {
        writer.write_record(&record).map_err(fail)?;
    }
    let bytes =
        writer.into_inner().map_err(|e| CliError::Failure(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Failure(format!("csv: {e}")))
}

/// One pair-parameter set in the report (both computation routes use it).
#[derive(Serialize)]
struct ParameterSection {
    s: f64,
    u: f64,
    v: f64,
    w_left: f64,
    w_right: f64,
}

impl ParameterSection {
    fn from_params(p: &PairParameters) -> Self {
        ParameterSection { s: p.s, u: p.u, v: p.v, w_left: p.w_f, w_right: p.w_g }
    }
}

#[derive(Serialize)]
struct MeritSection {
    cdf: f64,
    cmf: f64,
    df_left: f64,
    df_right: f64,
    psc: f64,
}

#[derive(Serialize)]
struct PairReport {
    p: u64,
    left: &'static str,
    right: &'static str,
    parameter_mode: &'static str,
    shift: i64,
    length: usize,
    /// Figures of merit of the unimodularized pair (zeros replaced by +1).
    merit: MeritSection,
    /// Parameters from the defining Gauss-sum route.
    parameters_direct: ParameterSection,
    /// Parameters from the closed-form family table.
    parameters_table: ParameterSection,
    /// |measured full-period mean square − (S + 1 + U + V)|.
    periodic_bridge_residual: f64,
}

fn run_pair(args: PairArgs) -> Result<(), CliError> {
    let usage = |e: charcorr::Error| CliError::Usage(e.to_string());
    let failure = |e: charcorr::Error| CliError::Failure(e.to_string());

    let field = Arc::new(PrimeField::new(args.p).map_err(usage)?);
    let (parameter_mode, shift, length) = match (args.shift, args.length, args.appended) {
        (Some(shift), Some(length), _) => {
            if length == 0 {
                return Err(CliError::Usage("--length must be at least 1".to_string()));
            }
            ("explicit", shift, length)
        }
        (None, None, true) => {
            let (s, l) = ParameterChoice::Appended.shift_length(args.p).map_err(usage)?;
            ("appended", s, l)
        }
        (None, None, false) => {
            let (s, l) = ParameterChoice::Natural.shift_length(args.p).map_err(usage)?;
            ("natural", s, l)
        }
        _ => unreachable!("clap enforces --shift and --length together"),
    };

    let left_kind = args.left.kind();
    let right_kind = args.right.kind();
    let left_spec = left_kind.spec(field.clone()).map_err(usage)?;
    let right_spec = right_kind.spec(field.clone()).map_err(usage)?;

    let left_seq = left_spec.sequence(shift, length).unimodularize();
    let right_seq = right_spec.sequence(shift, length).unimodularize();
    let merit = merit_report(&left_seq, &right_seq).map_err(failure)?;

    let direct = parameters_from_combinations(
        &combination_coefficients(&left_spec),
        &combination_coefficients(&right_spec),
    )
    .map_err(failure)?;
    let table = standard_family_parameters(&field, left_kind, right_kind).map_err(failure)?;
    let measured =
        mean_square_periodic(&left_spec.period_terms(), &right_spec.period_terms())
            .map_err(failure)?;
    let predicted = direct.s + 1.0 + direct.u + direct.v;

    let report = PairReport {
        p: args.p,
        left: left_kind.letter(),
        right: right_kind.letter(),
        parameter_mode,
        shift,
        length,
        merit: MeritSection {
            cdf: merit.cdf,
            cmf: merit.cmf,
            df_left: merit.df_f,
            df_right: merit.df_g,
            psc: merit.psc,
        },
        parameters_direct: ParameterSection::from_params(&direct),
        parameters_table: ParameterSection::from_params(&table),
        periodic_bridge_residual: (measured - predicted).abs(),
    };

    if args.json {
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| CliError::Failure(format!("json: {e}")))?;
        println!("{text}");
    } else {
        print!("{}", render_pair_report(&report));
    }
    Ok(())
}

fn render_pair_report(report: &PairReport) -> String {
    // Plain 9-significant-digit decimals, except sub-microscopic magnitudes
    // (roundoff residue of algebraic zeros), which read better in scientific
    // notation than as a wall of leading zeros.
    let fmt = |x: f64| {
        if x != 0.0 && x.abs() < 1e-6 {
            format!("{x:.3e}")
        } else {
            format_significant(x, 9)
        }
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "pair: p={}, left={}, right={}",
        report.p, report.left, report.right
    );
    let _ = writeln!(
        out,
        "window: {} (shift={}, length={}), zeros replaced by +1",
        report.parameter_mode, report.shift, report.length
    );
    let _ = writeln!(out, "figures of merit:");
    let _ = writeln!(out, "  cdf       {}", fmt(report.merit.cdf));
    let _ = writeln!(out, "  cmf       {}", fmt(report.merit.cmf));
    let _ = writeln!(out, "  df_left   {}", fmt(report.merit.df_left));
    let _ = writeln!(out, "  df_right  {}", fmt(report.merit.df_right));
    let _ = writeln!(out, "  psc       {}", fmt(report.merit.psc));
    for (title, params) in [
        ("pair parameters (defining route):", &report.parameters_direct),
        ("pair parameters (family table):", &report.parameters_table),
    ] {
        let _ = writeln!(out, "{title}");
        let _ = writeln!(out, "  s         {}", fmt(params.s));
        let _ = writeln!(out, "  u         {}", fmt(params.u));
        let _ = writeln!(out, "  v         {}", fmt(params.v));
        let _ = writeln!(out, "  w_left    {}", fmt(params.w_left));
        let _ = writeln!(out, "  w_right   {}", fmt(params.w_right));
    }
    let _ = writeln!(
        out,
        "periodic mean-square bridge residual: {:.3e}",
        report.periodic_bridge_residual
    );
    out
}

fn run_verify() -> ExitCode {
    let outcomes = run_all();
    for outcome in &outcomes {
        println!(
            "{} {}: residual {:.3e}, tolerance {:.1e} — {}",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.name,
            outcome.max_residual,
            outcome.tolerance,
            outcome.detail
        );
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "{} suites run, {} passed, {} failed",
        outcomes.len(),
        outcomes.len() - failed,
        failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_constants() -> Result<(), CliError> {
    let failure = |e: charcorr::Error| CliError::Failure(e.to_string());
    let constants = optimum_constants();
    let coefficients = appended_limit_coefficients().map_err(failure)?;
    let psc_appended = psc_limit_appended().map_err(failure)?;
    let rows: [(&str, f64, &str); 8] = [
        (
            "df_min",
            constants.df_min,
            "least limiting autocorrelation demerit factor",
        ),
        (
            "mf_max",
            constants.mf_max,
            "greatest limiting autocorrelation merit factor (1/df_min)",
        ),
        (
            "lambda_app",
            constants.lambda_app,
            "length ratio attaining df_min",
        ),
        (
            "psc_natural",
            ratio_to_f64(psc_limit_natural()),
            "limiting tradeoff criterion at natural parameters (7/6)",
        ),
        (
            "psc_appended",
            psc_appended,
            "limiting tradeoff criterion at appended parameters",
        ),
        (
            "appended_df_constant",
            coefficients.df_constant,
            "demerit-factor limit = constant − coefficient·cos(2γ)",
        ),
        (
            "appended_cdf_constant",
            coefficients.cdf_constant,
            "crosscorrelation limit = constant + coefficient·cos(2γ)",
        ),
        (
            "appended_cos_coefficient",
            coefficients.cos_coefficient,
            "shared cos(2γ) coefficient of the appended limits",
        ),
    ];
    for (name, value, description) in rows {
        println!("{name:<26} {:>10}  {description}", format_significant(value, 8));
    }
    Ok(())
}
