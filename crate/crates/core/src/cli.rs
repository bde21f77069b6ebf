//! JSON function files and the `geninv` command implementations.
//!
//! A function file looks like
//!
//! ```json
//! {
//!   "breakpoints": [{"x": "0", "value": "1"}],
//!   "segments": [{"slope": "0", "intercept": "0"}, {"slope": "0", "intercept": "1"}]
//! }
//! ```
//!
//! Numbers are strings: integers, decimals (`"0.25"`, `"1e-3"`) or `"p/q"`,
//! all converted exactly. Output always uses `"p/q"` or integer form.
//! Inverses may take the values `-inf`/`+inf`; in their files an infinite
//! piece is written with slope `"0"` and intercept `"-inf"` or `"+inf"`,
//! and breakpoint values may be infinite. Plain function files reject both.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 violations found.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::compose::{predict_inv_after_t, predict_one_sided, predict_t_after_inv, CompositionReport};
use crate::error::{Error, Result, Side};
use crate::inverse::{invert, Which};
use crate::piecewise::{Breakpoint, ExtPiecewise, ExtSegment, PiecewiseMonotone, Segment};
use crate::properties::{property_ids, run_property, run_suite, GeneratorConfig, PropertyResult};
use crate::sampling::{ecdf, ks_distance, sample, validate_cdf};
use crate::scalar::{int, parse_ext, rational_to_f64, ExtReal, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "GENINV_SEED";
const FALLBACK_SEED: u64 = 42;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BreakpointEntry {
    pub x: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentEntry {
    pub slope: String,
    pub intercept: String,
}

/// On-disk form of a function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub breakpoints: Vec<BreakpointEntry>,
    pub segments: Vec<SegmentEntry>,
}

fn finite_only(s: &str) -> Result<Rational> {
    match parse_ext(s)? {
        ExtReal::Fin(r) => Ok(r),
        _ => Err(Error::Parse(format!("infinite value {s:?} is only allowed in inverse files"))),
    }
}

impl FunctionFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("string fields always serialize")
    }

    pub fn from_function(f: &PiecewiseMonotone) -> Self {
        FunctionFile {
            breakpoints: f
                .breakpoints()
                .iter()
                .map(|bp| BreakpointEntry { x: bp.x.to_string(), value: bp.value.to_string() })
                .collect(),
            segments: f.segments().iter().map(segment_entry).collect(),
        }
    }

    pub fn from_ext_function(f: &ExtPiecewise) -> Self {
        FunctionFile {
            breakpoints: f
                .breakpoints()
                .iter()
                .map(|bp| BreakpointEntry { x: bp.x.to_string(), value: bp.value.to_string() })
                .collect(),
            segments: f
                .segments()
                .iter()
                .map(|s| match s {
                    ExtSegment::Affine(s) => segment_entry(s),
                    ExtSegment::NegInf => SegmentEntry { slope: "0".into(), intercept: "-inf".into() },
                    ExtSegment::PosInf => SegmentEntry { slope: "0".into(), intercept: "+inf".into() },
                })
                .collect(),
        }
    }

    /// Parses into a validated, canonical function; infinite values are rejected.
    pub fn to_function(&self) -> Result<PiecewiseMonotone> {
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|b| Ok(Breakpoint::new(finite_only(&b.x)?, finite_only(&b.value)?)))
            .collect::<Result<Vec<_>>>()?;
        let segments = self
            .segments
            .iter()
            .map(|s| Ok(Segment::new(finite_only(&s.slope)?, finite_only(&s.intercept)?)))
            .collect::<Result<Vec<_>>>()?;
        PiecewiseMonotone::new(breakpoints, segments)
    }

    pub fn to_ext_function(&self) -> Result<ExtPiecewise> {
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|b| Ok(Breakpoint::new(finite_only(&b.x)?, parse_ext(&b.value)?)))
            .collect::<Result<Vec<_>>>()?;
        let segments = self
            .segments
            .iter()
            .map(|s| {
                let slope = finite_only(&s.slope)?;
                Ok(match parse_ext(&s.intercept)? {
                    ExtReal::Fin(c) => ExtSegment::Affine(Segment::new(slope, c)),
                    inf if slope != int(0) => {
                        return Err(Error::Parse(format!("infinite piece {inf} must have slope 0")));
                    }
                    ExtReal::NegInf => ExtSegment::NegInf,
                    ExtReal::PosInf => ExtSegment::PosInf,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ExtPiecewise::new(breakpoints, segments)
    }
}

fn segment_entry(s: &Segment) -> SegmentEntry {
    SegmentEntry { slope: s.slope.to_string(), intercept: s.intercept.to_string() }
}

pub fn parse_function(text: &str) -> Result<PiecewiseMonotone> {
    FunctionFile::from_json(text)?.to_function()
}

pub fn parse_ext_function(text: &str) -> Result<ExtPiecewise> {
    FunctionFile::from_json(text)?.to_ext_function()
}

pub fn emit_function(f: &PiecewiseMonotone) -> String {
    FunctionFile::from_function(f).to_json()
}

pub fn emit_ext_function(f: &ExtPiecewise) -> String {
    FunctionFile::from_ext_function(f).to_json()
}

pub fn read_function(path: &Path) -> Result<PiecewiseMonotone> {
    parse_function(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses line-oriented data: one number per line; blank lines and lines
/// starting with `#` are ignored.
pub fn parse_data(text: &str) -> Result<Vec<Rational>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(finite_only).collect()
}

/// Short machine-readable name of an error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MalformedShape { .. } => "MalformedShape",
        Error::UnsortedBreakpoints(_) => "UnsortedBreakpoints",
        Error::MonotonicityViolation { .. } => "MonotonicityViolation",
        Error::NonPositiveDenominator(_) => "NonPositiveDenominator",
        Error::Parse(_) => "Parse",
        Error::NotOneSidedContinuous { .. } => "NotOneSidedContinuous",
        Error::NotRightContinuous(_) => "NotRightContinuous",
        Error::BadLimits { .. } => "BadLimits",
        Error::OutOfUnitRange { .. } => "OutOfUnitRange",
        Error::EmptySample => "EmptySample",
        Error::UnknownProperty(_) => "UnknownProperty",
        Error::Usage(_) => "Usage",
        Error::Io(_) => "Io",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({ "error": error_kind(e), "message": e.to_string() });
    if let Error::MonotonicityViolation { location, .. } = e {
        v["location"] = json!(location.to_string());
    }
    v
}

/// What a command produced: text for stdout and an exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: EXIT_OK }
    }
}

pub fn cmd_validate(path: &Path) -> Result<Output> {
    Ok(Output::ok(emit_function(&read_function(path)?)))
}

pub fn cmd_invert(path: &Path, which: Which) -> Result<Output> {
    Ok(Output::ok(emit_ext_function(&invert(&read_function(path)?, which))))
}

pub fn cmd_eval(path: &Path, at: &str, side: Option<Side>) -> Result<Output> {
    let f = read_function(path)?;
    let y = finite_only(at)?;
    let v = match side {
        None => f.eval(&y),
        Some(Side::Left) => f.left_limit(&y),
        Some(Side::Right) => f.right_limit(&y),
    };
    Ok(Output::ok(v.to_string()))
}

pub fn report_json(r: &CompositionReport) -> Value {
    json!({
        "label": r.label,
        "clean": r.is_clean(),
        "predicted": r.predicted.iter().map(|p| json!({
            "region": p.region.to_string(),
            "law": law_string(&p.law),
        })).collect::<Vec<_>>(),
        "excluded": r.excluded.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "edge_values": r.edge_values.iter().map(|(x, v)| json!({"x": x.to_string(), "value": v.to_string()})).collect::<Vec<_>>(),
        "mismatches": r.mismatches.iter().map(|m| json!({
            "point": m.point.to_string(),
            "predicted": m.predicted.to_string(),
            "actual": m.actual.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn law_string(l: &ExtSegment) -> String {
    match l {
        ExtSegment::NegInf => "-inf".into(),
        ExtSegment::PosInf => "+inf".into(),
        ExtSegment::Affine(s) if s.slope == int(0) => s.intercept.to_string(),
        ExtSegment::Affine(s) => s.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeCheck {
    /// T∘T± and T±∘T for arbitrary T.
    General,
    /// The gap-free forms for globally one-sided continuous T.
    OneSided(Side),
}

pub fn cmd_compose(path: &Path, check: ComposeCheck) -> Result<Output> {
    let f = read_function(path)?;
    let reports = match check {
        ComposeCheck::General => vec![
            predict_t_after_inv(&f, Which::Plus),
            predict_t_after_inv(&f, Which::Minus),
            predict_inv_after_t(&f, Which::Plus),
            predict_inv_after_t(&f, Which::Minus),
        ],
        ComposeCheck::OneSided(side) => {
            let (a, b) = predict_one_sided(&f, side)?;
            vec![a, b]
        }
    };
    let clean = reports.iter().all(CompositionReport::is_clean);
    let doc = json!({
        "clean": clean,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    Ok(Output {
        stdout: serde_json::to_string_pretty(&doc).expect("json values serialize"),
        code: if clean { EXIT_OK } else { EXIT_VIOLATION },
    })
}

/// Violations listed per property in a suite report; the rest are counted.
const MAX_LISTED_VIOLATIONS: usize = 20;

pub fn result_json(r: &PropertyResult) -> Value {
    json!({
        "id": r.property_id,
        "passed": r.passed(),
        "implication": r.implication,
        "cases_run": r.cases_run,
        "checks": r.checks,
        "hypothesis_hits": r.hypothesis_hits,
        "skips": r.skips,
        "violation_count": r.violations.len(),
        "violations": r.violations.iter().take(MAX_LISTED_VIOLATIONS).map(|v| json!({
            "function": FunctionFile::from_function(&v.function),
            "witness": v.witness,
            "expected": v.expected,
            "got": v.got,
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_check(seed: u64, cases: u64, only: Option<&str>) -> Result<Output> {
    let config = GeneratorConfig::with_seed(seed);
    let results = match only {
        Some(id) => vec![run_property(id, &config, cases)?],
        None => run_suite(&config, cases),
    };
    let passed = results.iter().all(PropertyResult::passed);
    let doc = json!({
        "seed": seed,
        "cases": cases,
        "passed": passed,
        "results": results.iter().map(result_json).collect::<Vec<_>>(),
    });
    Ok(Output {
        stdout: serde_json::to_string_pretty(&doc).expect("json values serialize"),
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn cmd_sample(path: &Path, n: usize, seed: u64) -> Result<Output> {
    let cdf = validate_cdf(&read_function(path)?)?;
    let lines: Vec<String> = sample(&cdf, n, seed).iter().map(ToString::to_string).collect();
    Ok(Output::ok(lines.join("\n")))
}

pub fn cmd_ecdf(data: &Path) -> Result<Output> {
    let cdf = ecdf(&parse_data(&read(data)?)?)?;
    Ok(Output::ok(emit_function(cdf.cdf())))
}

pub fn cmd_ks(a: &Path, b: &Path) -> Result<Output> {
    let fa = validate_cdf(&read_function(a)?)?;
    let fb = validate_cdf(&read_function(b)?)?;
    Ok(Output::ok(ks_distance(&fa, &fb).to_string()))
}

/// `k` evenly spaced points of `[a, b]` plus the breakpoints inside it.
pub fn plot_points(f: &PiecewiseMonotone, a: &Rational, b: &Rational, k: usize) -> Result<Vec<Rational>> {
    if a > b {
        return Err(Error::Usage(format!("empty plot range: xmin {a} > xmax {b}")));
    }
    let mut xs: Vec<Rational> = match k {
        0 => Vec::new(),
        1 => vec![a.clone()],
        _ => (0..k).map(|i| a + (b - a) * Rational::new(i.into(), (k - 1).into())).collect(),
    };
    xs.extend(f.breakpoints().iter().map(|bp| bp.x.clone()).filter(|x| a <= x && x <= b));
    xs.sort();
    xs.dedup();
    Ok(xs)
}

pub fn cmd_plotdata(path: &Path, xmin: &str, xmax: &str, points: usize) -> Result<Output> {
    let f = read_function(path)?;
    let xs = plot_points(&f, &finite_only(xmin)?, &finite_only(xmax)?, points)?;
    let rows: Vec<String> = xs
        .iter()
        .map(|x| {
            [x.clone(), f.eval(x), f.left_limit(x), f.right_limit(x)]
                .iter()
                .map(|v| rational_to_f64(v).to_string())
                .collect::<Vec<_>>()
                .join("\t")
        })
        .collect();
    Ok(Output::ok(rows.join("\n")))
}

#[derive(Parser, Debug)]
#[command(name = "geninv", version, about = "Exact generalized inverses of nondecreasing piecewise-affine functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct WhichArg {
    /// Right-continuous inverse, inf{x : T(x) > y}.
    #[arg(long)]
    plus: bool,
    /// Left-continuous inverse, inf{x : T(x) >= y}.
    #[arg(long)]
    minus: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CheckArg {
    /// Closed forms of T∘T± and T±∘T for arbitrary T.
    #[arg(long = "check-lemma4")]
    general: bool,
    /// Gap-free closed forms for a globally one-sided continuous T.
    #[arg(long = "check-lemma5", value_name = "SIDE")]
    one_sided: Option<SideArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a function file and print its canonical form.
    Validate { path: PathBuf },
    /// Print T+ or T- as a function file.
    Invert {
        path: PathBuf,
        #[command(flatten)]
        which: WhichArg,
    },
    /// Evaluate T, or a one-sided limit of T, at a point.
    Eval {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, conflicts_with = "right")]
        left: bool,
        #[arg(long)]
        right: bool,
    },
    /// Compare compositions of T with its inverses against their closed forms.
    Compose {
        path: PathBuf,
        #[command(flatten)]
        check: CheckArg,
    },
    /// Run the property suite on random functions.
    Check {
        #[arg(long, env = SEED_ENV, default_value_t = FALLBACK_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        /// Run a single property.
        #[arg(long)]
        only: Option<String>,
        /// List the registered property ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Draw samples from a CDF file by inverse transform.
    Sample {
        path: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, env = SEED_ENV, default_value_t = FALLBACK_SEED)]
        seed: u64,
    },
    /// Build the empirical CDF of a data file (one number per line).
    Ecdf { path: PathBuf },
    /// Kolmogorov-Smirnov distance between two CDF files.
    Ks { a: PathBuf, b: PathBuf },
    /// Tab-separated x, T(x), T(x-), T(x+) over a range, breakpoints included.
    Plotdata {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        xmin: String,
        #[arg(long, allow_hyphen_values = true)]
        xmax: String,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
}

pub fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Invert { path, which } => cmd_invert(&path, if which.plus { Which::Plus } else { Which::Minus }),
        Command::Eval { path, at, left, right } => {
            let side = match (left, right) {
                (true, _) => Some(Side::Left),
                (_, true) => Some(Side::Right),
                _ => None,
            };
            cmd_eval(&path, &at, side)
        }
        Command::Compose { path, check } => {
            let check = match check.one_sided {
                Some(side) => ComposeCheck::OneSided(side.into()),
                None => ComposeCheck::General,
            };
            cmd_compose(&path, check)
        }
        Command::Check { list: true, .. } => Ok(Output::ok(property_ids().join("\n"))),
        Command::Check { seed, cases, only, .. } => cmd_check(seed, cases, only.as_deref()),
        Command::Sample { path, n, seed } => cmd_sample(&path, n, seed),
        Command::Ecdf { path } => cmd_ecdf(&path),
        Command::Ks { a, b } => cmd_ks(&a, &b),
        Command::Plotdata { path, xmin, xmax, points } => cmd_plotdata(&path, &xmin, &xmax, points),
    }
}

/// Parses arguments, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            if !o.stdout.is_empty() {
                let _ = writeln!(out, "{}", o.stdout);
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(&e));
            EXIT_USAGE
        }
    }
}
