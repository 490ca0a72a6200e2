//! The `triexp` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::census::{classify_base, classify_detailed, default_node_cap, witness_for_bk, Cardinality, CensusError};
use crate::dimension::{
    delta_lower_bound, dim_attractor, dim_continuum, dim_multi, dim_univoque, dim_univoque_bounds, DimReport,
    DimensionError, DEFAULT_PRECISION,
};
use crate::expansion::{alpha, eval, greedy_digits, quasi_greedy_digits, Base, ExpansionError, Regime};
use crate::numeric::{parse_rational, rational_to_f64, FieldElement, Rational};
use crate::verify;
use crate::words::{EPWord, WordError};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "triexp", version, about = "Expansions in base q with digits 0, 1 and q")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Greedy,
    QuasiGreedy,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Greedy or quasi-greedy digits of a point.
    Expand {
        /// A polynomial in q such as `q-1`, or a word such as `0(q)*`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        base: String,
        #[arg(long, value_enum, default_value_t = Mode::Greedy)]
        mode: Mode,
        #[arg(long, default_value_t = 16)]
        n: usize,
    },
    /// The quasi-greedy expansion of q - 1.
    Alpha {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 32)]
        n: usize,
    },
    /// How many expansions the value of a word has.
    Count {
        #[arg(long)]
        word: String,
        #[arg(long)]
        base: String,
        /// Follower values explored before giving up.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Which expansion-count classes occur in a base.
    ClassifyBase {
        #[arg(long)]
        base: String,
    },
    /// Hausdorff dimensions.
    Dim {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        /// Block length for the bounds between q_c and q*.
        #[arg(long)]
        depth: Option<usize>,
        /// Also report the points with exactly k expansions.
        #[arg(long)]
        k: Option<usize>,
    },
    /// A word whose value has exactly k expansions.
    Witness {
        #[arg(long)]
        base: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Dimensions over a grid of rational bases, written as CSV.
    Sweep {
        #[arg(long)]
        qmin: String,
        #[arg(long)]
        qmax: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Reproduces the published constants and statements.
    VerifyPaper,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<ExpansionError> for CliError {
    fn from(e: ExpansionError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<DimensionError> for CliError {
    fn from(e: DimensionError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        let code = match e {
            CensusError::CapExceeded(_) => EXIT_CAP,
            CensusError::WitnessCheckFailed { .. } => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

/// What a command produced: a JSON report, its text rendering and an exit code.
pub struct Output {
    pub report: Value,
    pub text: String,
    pub code: i32,
}

fn output(command: &str, mut report: Value, text: String, code: i32) -> Output {
    report["schema"] = json!(SCHEMA);
    report["command"] = json!(command);
    Output { report, text, code }
}

fn parse_base(s: &str) -> Result<Base, CliError> {
    s.parse::<Base>()
        .map_err(|e| CliError::usage(format!("base `{s}`: {e}")))
}

fn parse_word(s: &str) -> Result<EPWord, CliError> {
    Ok(s.parse::<EPWord>()?)
}

fn parse_point(s: &str, base: &Base) -> Result<FieldElement, CliError> {
    if s.contains('(') {
        return Ok(eval(&parse_word(s)?, base));
    }
    Ok(base.parse_element(s)?)
}

fn dim_json(r: &DimReport) -> Value {
    serde_json::to_value(r).expect("reports serialise")
}

fn dim_text(name: &str, r: &DimReport) -> String {
    let kind = if r.is_exact() { "exact" } else { "bounds" };
    format!("{name}: {r} [{kind}, {} decimals]\n", r.precision())
}

fn cmd_expand(x: &str, base: &str, mode: Mode, n: usize) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    let x = parse_point(x, &base)?;
    let (digits, remainder) = match mode {
        Mode::Greedy => {
            let run = greedy_digits(&x, &base, n)?;
            (run.digits, run.remainder)
        }
        Mode::QuasiGreedy => {
            let digits = quasi_greedy_digits(&x, &base, n)?;
            let rem = digits.digits().iter().fold(x.clone(), |v, &d| base.shift(&v, d));
            (digits, rem)
        }
    };
    let mode_name = match mode {
        Mode::Greedy => "greedy",
        Mode::QuasiGreedy => "quasi-greedy",
    };
    let report = json!({
        "base": base.label(),
        "mode": mode_name,
        "digits": digits.to_string(),
        "remainder": remainder.to_string(),
    });
    let text = format!("{digits}\nremainder: {remainder}\n");
    Ok(output("expand", report, text, EXIT_OK))
}

fn cmd_alpha(base: &str, n: usize) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    let a = alpha(&base, n)?;
    let closure = a.closure.as_ref().map(|c| c.to_string());
    let report = json!({ "base": base.label(), "prefix": a.prefix.to_string(), "closure": closure });
    let mut text = format!("{}\n", a.prefix);
    match &closure {
        Some(c) => text.push_str(&format!("closure: {c}\n")),
        None => text.push_str(&format!(
            "no period found within {} digits\n",
            crate::expansion::ALPHA_DEPTH_CAP
        )),
    }
    Ok(output("alpha", report, text, EXIT_OK))
}

fn cmd_count(word: &str, base: &str, cap: Option<usize>) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    let w = parse_word(word)?;
    let x = eval(&w, &base);
    let cap = cap.unwrap_or_else(default_node_cap);
    if cap == 0 {
        return Err(CliError::usage("cap must be positive"));
    }
    let c = classify_detailed(&x, &base, cap);
    let mut code = EXIT_OK;
    let mut text = format!("{}\n", c.cardinality.label());
    match &c.cardinality {
        Cardinality::Finite { witnesses, .. } => {
            for v in witnesses {
                let back: EPWord = v.to_string().parse()?;
                if eval(&back, &base) != x {
                    return Err(CliError {
                        code: EXIT_VERIFY,
                        message: format!("witness {v} does not evaluate to the point"),
                    });
                }
                text.push_str(&format!("{v}\n"));
            }
        }
        Cardinality::UnresolvedAtCap { cap } => {
            text.push_str(&format!(
                "no certificate within {cap} follower values; retry with a larger --cap\n"
            ));
            code = EXIT_CAP;
        }
        _ => {}
    }
    let report = json!({
        "base": base.label(),
        "word": w.to_string(),
        "value": x.to_string(),
        "cardinality": c.cardinality,
        "certificate": c.certificate,
        "nodes_explored": c.nodes_explored,
    });
    Ok(output("count", report, text, code))
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::SubCritical => "sub-critical",
        Regime::Middle => "middle",
        Regime::Super => "super",
    }
}

fn cmd_classify_base(base: &str) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    let m = classify_base(&base);
    let yn = |b: bool| if b { "yes" } else { "no" };
    let text = format!(
        "regime: {}\nunique: {}\nfinite k >= 2: {}\ncountably infinite: {}\ncontinuum: {}\n",
        regime_name(base.regime()),
        yn(m.unique),
        yn(m.finite_k),
        yn(m.countable),
        yn(m.continuum)
    );
    let report = json!({ "base": base.label(), "regime": base.regime(), "membership": m });
    Ok(output("classify-base", report, text, EXIT_OK))
}

fn cmd_dim(base: &str, precision: usize, depth: Option<usize>, k: Option<usize>) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    let mut report = json!({ "base": base.label(), "regime": base.regime() });
    let mut text = format!("regime: {}\n", regime_name(base.regime()));
    let e = dim_attractor(&base, precision);
    text.push_str(&dim_text("attractor", &e));
    report["attractor"] = dim_json(&e);
    let u = match (base.regime(), depth) {
        (Regime::Middle, Some(m)) if base.real() != &crate::numeric::RealAlgebraic::attractor_threshold() => {
            let b = dim_univoque_bounds(&base, m)?;
            DimReport::bounds(b.lo(), b.hi(), precision)
        }
        _ => dim_univoque(&base, precision)?,
    };
    text.push_str(&dim_text("univoque", &u));
    report["univoque"] = dim_json(&u);
    if let Some(k) = k {
        if k == 0 {
            return Err(CliError::usage("k must be positive"));
        }
        match dim_multi(&base, k, precision) {
            Ok(d) => {
                text.push_str(&dim_text(&format!("exactly {k} expansions"), &d));
                report["multi"] = json!({ "k": k, "dim": dim_json(&d) });
            }
            Err(DimensionError::EmptySet { k }) => {
                text.push_str(&format!("exactly {k} expansions: empty set\n"));
                report["multi"] = json!({ "k": k, "dim": null, "empty": true });
            }
            Err(e) => return Err(e.into()),
        }
    }
    let c = dim_continuum(&base, precision);
    text.push_str(&dim_text("continuum of expansions", &c));
    report["continuum"] = dim_json(&c);
    if base.regime() == Regime::Middle {
        let (m, d) = delta_lower_bound(&base)?;
        text.push_str(&format!(
            "delta bound: m = {m}, {d} [exact, {} decimals]\n",
            d.precision()
        ));
        report["delta"] = json!({ "m": m, "bound": dim_json(&d) });
    }
    Ok(output("dim", report, text, EXIT_OK))
}

fn cmd_witness(base: &str, k: usize, cap: Option<usize>) -> Result<Output, CliError> {
    let base = parse_base(base)?;
    if k == 0 {
        return Err(CliError::usage("k must be positive"));
    }
    let w = witness_for_bk(&base, k, cap.unwrap_or_else(default_node_cap))?;
    let report = json!({ "base": base.label(), "k": k, "word": w.to_string(), "value": eval(&w, &base).to_string() });
    Ok(output("witness", report, format!("{w}\n"), EXIT_OK))
}

/// One CSV row of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub q: Rational,
    pub dim_e: f64,
    pub dim_u_lo: f64,
    pub dim_u_hi: f64,
    pub delta: Option<(usize, f64)>,
}

fn sweep_row(q: &Rational, depth: usize) -> Result<SweepRow, CliError> {
    let base = Base::from_rational(q.clone())?;
    let e = dim_attractor(&base, DEFAULT_PRECISION);
    let u = match base.regime() {
        Regime::Middle => dim_univoque_bounds(&base, depth)?,
        _ => dim_univoque(&base, DEFAULT_PRECISION)?,
    };
    let delta = match base.regime() {
        Regime::Middle => {
            let (m, d) = delta_lower_bound(&base)?;
            Some((m, d.approx()))
        }
        _ => None,
    };
    Ok(SweepRow {
        q: q.clone(),
        dim_e: e.approx(),
        dim_u_lo: u.lo(),
        dim_u_hi: u.hi(),
        delta,
    })
}

/// `steps` evenly spaced rational bases from `qmin` to `qmax` inclusive.
pub fn sweep_grid(qmin: &Rational, qmax: &Rational, steps: usize) -> Vec<Rational> {
    if steps == 1 {
        return vec![qmin.clone()];
    }
    let h = (qmax - qmin) / Rational::from_integer((steps as i64 - 1).into());
    (0..steps)
        .map(|i| qmin + &h * Rational::from_integer((i as i64).into()))
        .collect()
}

/// Computes sweep rows concurrently, in ascending order of `q`.
pub fn sweep(qmin: &Rational, qmax: &Rational, steps: usize, depth: usize) -> Result<Vec<SweepRow>, CliError> {
    let one = Rational::from_integer(1.into());
    if qmin <= &one || qmin >= qmax || steps == 0 {
        return Err(CliError::usage("sweep needs 1 < qmin < qmax and steps >= 1"));
    }
    sweep_grid(qmin, qmax, steps)
        .par_iter()
        .map(|q| sweep_row(q, depth))
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], precision: usize, w: W) -> Result<(), CliError> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(["q", "dim_E", "dim_U_lo", "dim_U_hi", "delta_m", "delta_bound"])?;
    let f = |x: f64| format!("{x:.precision$}");
    for r in rows {
        let (m, d) = match r.delta {
            Some((m, d)) => (m.to_string(), f(d)),
            None => (String::new(), String::new()),
        };
        wr.write_record([f(rational_to_f64(&r.q)), f(r.dim_e), f(r.dim_u_lo), f(r.dim_u_hi), m, d])?;
    }
    wr.flush()?;
    Ok(())
}

fn cmd_sweep(
    qmin: &str,
    qmax: &str,
    steps: usize,
    depth: usize,
    out: &PathBuf,
    precision: usize,
) -> Result<Output, CliError> {
    let lo = parse_rational(qmin).map_err(|e| CliError::usage(e.to_string()))?;
    let hi = parse_rational(qmax).map_err(|e| CliError::usage(e.to_string()))?;
    let rows = sweep(&lo, &hi, steps, depth)?;
    let file = std::fs::File::create(out).map_err(|e| CliError {
        code: EXIT_IO,
        message: format!("{}: {e}", out.display()),
    })?;
    write_sweep_csv(&rows, precision, file)?;
    let report = json!({ "out": out.display().to_string(), "rows": rows.len(), "precision": precision });
    let text = format!("wrote {} rows to {}\n", rows.len(), out.display());
    Ok(output("sweep", report, text, EXIT_OK))
}

fn cmd_verify_paper() -> Output {
    let results = verify::run_all();
    let all = results.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!(
            "[{}] {:>2} {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title
        ));
        for d in r.details.iter().filter(|d| !d.starts_with("ok")) {
            text.push_str(&format!("       {d}\n"));
        }
    }
    let report = json!({ "passed": all, "checks": results });
    output("verify-paper", report, text, if all { EXIT_OK } else { EXIT_VERIFY })
}

/// Runs one parsed command.
pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Expand { x, base, mode, n } => cmd_expand(x, base, *mode, *n),
        Command::Alpha { base, n } => cmd_alpha(base, *n),
        Command::Count { word, base, cap } => cmd_count(word, base, *cap),
        Command::ClassifyBase { base } => cmd_classify_base(base),
        Command::Dim {
            base,
            precision,
            depth,
            k,
        } => cmd_dim(base, *precision, *depth, *k),
        Command::Witness { base, k, cap } => cmd_witness(base, *k, *cap),
        Command::Sweep {
            qmin,
            qmax,
            steps,
            depth,
            out,
            precision,
        } => cmd_sweep(qmin, qmax, *steps, *depth, out, *precision),
        Command::VerifyPaper => Ok(cmd_verify_paper()),
    }
}

/// Parses `args`, runs the command and writes to `out` and `err`. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.report).expect("json"))
            } else {
                write!(out, "{}", o.text)
            };
            if written.is_err() {
                return EXIT_IO;
            }
            o.code
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "schema": SCHEMA, "error": e.message, "exit": e.code })
                );
            }
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
