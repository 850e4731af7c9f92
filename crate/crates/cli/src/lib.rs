//! Command-line front end for the exact inequality checker.
//!
//! Exit codes: 0 when everything checked held, 1 when an inequality failed
//! with its hypotheses met, 2 when a `check` input misses the hypotheses,
//! 3 for argument, input and parse errors.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use opial_core::inequality::{lookup, WindowKind};
use opial_core::oracle::{fuzz, ratio_scan, reproduce_examples, FuzzConfig, DEFAULT_SCAN_BUDGET};
use opial_core::{
    check_pair_with, check_single_with, synchronous, CheckOptions, IntervalSequence, PairBoundary, Precondition,
    Rational, SumConvention, TheoremId, Verdict, Window,
};
use serde::Serialize;
use serde_json::{json, Value};

mod input;
mod table;

pub use input::{parse_sequence, Input, InputError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_HYPOTHESES: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "opial", version, about = "Exact checks of discrete Opial-type inequalities on interval sequences")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check one inequality, or every applicable one, on a JSON input.
    Check(CheckArgs),
    /// Report monotonicity, segments and synchronicity of a JSON input.
    Classify(ClassifyArgs),
    /// Seeded random search for violations.
    Fuzz(FuzzArgs),
    /// Exhaustive ratio search over a small integer grid.
    Scan(ScanArgs),
    /// Recompute the worked examples.
    Examples,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Convention {
    Theorem,
    Literal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Boundary {
    AtOne,
    AtZero,
}

#[derive(Debug, Args)]
struct OptionArgs {
    /// Right-hand summation range for T3_5 and T4_5.
    #[arg(long, value_enum, default_value_t = Convention::Theorem)]
    convention: Convention,
    /// Left boundary index used by T3_10.
    #[arg(long = "t3-10-boundary", value_enum, default_value_t = Boundary::AtOne)]
    boundary: Boundary,
}

impl OptionArgs {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            convention: match self.convention {
                Convention::Theorem => SumConvention::Theorem,
                Convention::Literal => SumConvention::Literal,
            },
            t3_10_boundary: match self.boundary {
                Boundary::AtOne => PairBoundary::AtOne,
                Boundary::AtZero => PairBoundary::AtZero,
            },
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Theorem id such as T3_5; omit to run every applicable one.
    #[arg(long)]
    theorem: Option<TheoremId>,
    #[arg(long, default_value_t = 1)]
    l1: u32,
    #[arg(long, default_value_t = 1)]
    l2: u32,
    /// Summation window `n,m`.
    #[arg(long, value_parser = parse_window)]
    window: Option<Window>,
    #[command(flatten)]
    options: OptionArgs,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Require strict monotonicity.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct FuzzArgs {
    /// Theorem id; omit to fuzz all of them.
    #[arg(long)]
    theorem: Option<TheoremId>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Hypotheses to stop enforcing, comma separated.
    #[arg(long, value_delimiter = ',')]
    relax: Vec<Precondition>,
    /// Largest endpoint magnitude.
    #[arg(long, default_value_t = 100)]
    bound: u32,
    #[arg(long, default_value_t = 2)]
    min_len: usize,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    /// Largest exponent drawn for λ₁ and λ₂.
    #[arg(long, default_value_t = 4)]
    l_max: u32,
    #[command(flatten)]
    options: OptionArgs,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long, default_value_t = 1)]
    l1: u32,
    #[arg(long, default_value_t = 1)]
    l2: u32,
    #[arg(long, default_value_t = 4)]
    length: usize,
    /// Endpoints range over 0..=bound.
    #[arg(long, default_value_t = 3)]
    bound: u32,
    /// Largest number of candidates to enumerate.
    #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
    budget: u128,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (n, m) = s.split_once(',').ok_or("expected n,m")?;
    let int = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Window::new(int(n)?, int(m)?))
}

/// A finished command: the report, its exit code and anything for stderr.
struct Outcome {
    code: i32,
    json: Value,
    table: String,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn new(code: i32, report: &impl Serialize, table: String) -> Self {
        Outcome {
            code,
            json: serde_json::to_value(report).expect("reports serialize"),
            table,
            diagnostics: Vec::new(),
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(argv, &mut out, &mut err)
}

/// Like [`run`], writing the report to `out` and diagnostics to `err`.
pub fn run_with(argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            };
        }
    };
    let result = match &cli.command {
        Command::Check(a) => run_check(a),
        Command::Classify(a) => run_classify(a),
        Command::Fuzz(a) => run_fuzz(a),
        Command::Scan(a) => run_scan(a),
        Command::Examples => run_examples(),
    };
    match result {
        Ok(o) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("values serialize"),
                Format::Table => o.table,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            for d in o.diagnostics {
                let _ = writeln!(err, "{d}");
            }
            o.code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn read_input(path: &Path) -> Result<Input, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_sequence(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn check_one(
    input: &Input,
    id: TheoremId,
    exponents: (u32, u32),
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<Verdict, String> {
    let spec = lookup(id);
    let result = match (spec.arity, &input.v) {
        (2, Some(v)) => check_pair_with(&input.u, v, id, window, opts),
        (2, None) => return Err(format!("{id} compares two sequences; the input has no \"v\"")),
        (_, Some(_)) => return Err(format!("{id} takes one sequence; the input also has \"v\"")),
        (_, None) => check_single_with(&input.u, exponents.0, exponents.1, id, window, opts),
    };
    result.map_err(|e| e.to_string())
}

fn witness_dump(input: &Input) -> String {
    format!("witness: {}", input.to_json())
}

fn run_check(a: &CheckArgs) -> Result<Outcome, String> {
    let input = read_input(&a.input)?;
    let opts = a.options.options();
    let Some(id) = a.theorem else {
        return Ok(check_all(a, &input, &opts));
    };
    let verdict = check_one(&input, id, (a.l1, a.l2), a.window, &opts)?;
    let code = if verdict.is_violation() {
        EXIT_VIOLATION
    } else if !verdict.within_hypotheses {
        EXIT_HYPOTHESES
    } else {
        EXIT_OK
    };
    let mut o = Outcome::new(code, &verdict, table::verdict(&verdict));
    if code == EXIT_VIOLATION {
        o.diagnostics.push(witness_dump(&input));
    }
    Ok(o)
}

#[derive(Serialize)]
struct Skipped {
    theorem: TheoremId,
    reason: String,
}

#[derive(Serialize)]
struct CheckAllReport {
    verdicts: Vec<Verdict>,
    skipped: Vec<Skipped>,
}

/// Every theorem of the input's arity whose hypotheses the input meets.
fn check_all(a: &CheckArgs, input: &Input, opts: &CheckOptions) -> Outcome {
    let arity = if input.v.is_some() { 2 } else { 1 };
    let mut report = CheckAllReport {
        verdicts: Vec::new(),
        skipped: Vec::new(),
    };
    for id in TheoremId::ALL.into_iter().filter(|id| id.arity() == arity) {
        let spec = lookup(id);
        let window = match spec.window {
            WindowKind::None => None,
            _ => a.window,
        };
        let mut skip = |reason: String| report.skipped.push(Skipped { theorem: id, reason });
        if spec.window == WindowKind::Required && window.is_none() {
            skip("needs --window n,m".into());
            continue;
        }
        let exponents = spec.fixed_exponents.unwrap_or((a.l1, a.l2));
        match check_one(input, id, exponents, window, opts) {
            Err(e) => skip(e),
            Ok(v) if !v.within_hypotheses => {
                let failed: Vec<String> = v.failed_preconditions().map(|p| format!("{}: {}", p.name, p.detail)).collect();
                skip(format!("hypotheses not met ({})", failed.join("; ")));
            }
            Ok(v) => report.verdicts.push(v),
        }
    }
    let code = if report.verdicts.iter().any(Verdict::is_violation) {
        EXIT_VIOLATION
    } else if report.verdicts.is_empty() {
        EXIT_HYPOTHESES
    } else {
        EXIT_OK
    };
    let rendered = table::check_all(&report.verdicts, report.skipped.iter().map(|s| (s.theorem, s.reason.as_str())));
    let mut o = Outcome::new(code, &report, rendered);
    if code == EXIT_VIOLATION {
        o.diagnostics.push(witness_dump(input));
    }
    o
}

fn classify_one(seq: &IntervalSequence, strict: bool) -> Value {
    let segments = match seq.alternate_segments() {
        Ok(d) => json!(d),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "base_index": seq.base(),
        "length": seq.len(),
        "profile": seq.classify(strict),
        "segments": segments,
    })
}

fn run_classify(a: &ClassifyArgs) -> Result<Outcome, String> {
    let input = read_input(&a.input)?;
    let mut report = json!({ "u": classify_one(&input.u, a.strict) });
    if let Some(v) = &input.v {
        report["v"] = classify_one(v, a.strict);
        report["synchronicity"] = json!(synchronous(&input.u, v).map_err(|e| e.to_string())?);
    }
    let rendered = table::classify(&report);
    Ok(Outcome::new(EXIT_OK, &report, rendered))
}

fn run_fuzz(a: &FuzzArgs) -> Result<Outcome, String> {
    let relax: BTreeSet<Precondition> = a.relax.iter().copied().collect();
    let ids: Vec<TheoremId> = match a.theorem {
        Some(id) => vec![id],
        None => TheoremId::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for id in ids {
        let config = FuzzConfig {
            trials: a.trials,
            length_range: (a.min_len, a.max_len),
            endpoint_magnitude: a.bound,
            lambda_range: (1, a.l_max),
            relax: relax.clone(),
            options: a.options.options(),
            ..FuzzConfig::new(id, a.seed)
        };
        reports.push(fuzz(&config).map_err(|e| format!("{id}: {e}"))?);
    }
    // with hypotheses relaxed, violations are the point of the search; only a
    // failure that met every hypothesis counts against the exit code
    let failed = reports.iter().any(|r| {
        if relax.is_empty() {
            r.violation_count > 0
        } else {
            r.violations.iter().any(|v| v.verdict.is_violation())
        }
    });
    let rendered = table::fuzz(&reports);
    let mut o = if reports.len() == 1 {
        Outcome::new(EXIT_OK, &reports[0], rendered)
    } else {
        Outcome::new(EXIT_OK, &reports, rendered)
    };
    for r in &reports {
        if relax.is_empty() && r.nonconforming > 0 {
            o.diagnostics
                .push(format!("warning: {}: {} generated inputs missed a hypothesis", r.config.theorem, r.nonconforming));
        }
    }
    if failed {
        o.code = EXIT_VIOLATION;
        o.diagnostics.push("violations found; witnesses are listed in the report".into());
    }
    Ok(o)
}

fn run_scan(a: &ScanArgs) -> Result<Outcome, String> {
    let report = ratio_scan(a.theorem, a.l1, a.l2, a.length, a.bound, a.budget).map_err(|e| e.to_string())?;
    let over = report.max_ratio.as_ref().is_some_and(|r| *r > Rational::one());
    let code = if over { EXIT_VIOLATION } else { EXIT_OK };
    let rendered = table::scan(&report);
    Ok(Outcome::new(code, &report, rendered))
}

fn run_examples() -> Result<Outcome, String> {
    let reports = reproduce_examples().map_err(|e| e.to_string())?;
    let code = if reports.iter().all(|r| r.holds) { EXIT_OK } else { EXIT_VIOLATION };
    let rendered = table::examples(&reports);
    Ok(Outcome::new(code, &reports, rendered))
}
