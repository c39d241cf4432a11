//! `beatty`: command-line access to the exact golden-ratio arithmetic.
//!
//! Exit status: 0 for success, true or pass; 1 for false, none or a failed
//! check; 2 for usage and runtime errors.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use beatty_core::checker::{self, CheckReport, CheckSpec};
use beatty_core::extrema::{Extrema, ExtremumKind, Interval};
use beatty_core::formula::{Evaluator, Parser as FormulaParser};
use beatty_core::{fib, kernel, plot, Error, Int};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "beatty",
    version,
    about = "Exact arithmetic with ⌊φx⌋, Fibonacci floors and fractional-part order"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Human, global = true)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotFormat {
    Csv,
    SvgPoints,
}

#[derive(Subcommand)]
enum Command {
    /// ⌊φN⌋
    #[command(allow_negative_numbers = true)]
    F { n: Num },
    /// N + ⌊φN⌋
    #[command(allow_negative_numbers = true)]
    Fbar { n: Num },
    /// The x with f(x) = N, if any
    #[command(allow_negative_numbers = true)]
    Finv { n: Num },
    /// Compare X and Y, numerically or by fractional part of φ·
    #[command(allow_negative_numbers = true)]
    Cmp {
        #[arg(long)]
        frac: bool,
        x: Num,
        y: Num,
    },
    /// Largest even-index Fibonacci number ≤ N
    #[command(allow_negative_numbers = true)]
    Fibfloor { n: Num },
    /// Largest odd-index Fibonacci number ≤ N
    #[command(allow_negative_numbers = true)]
    G { n: Num },
    /// Greedy Fibonacci decomposition of N (indices with F_0 = F_1 = 1)
    #[command(allow_negative_numbers = true)]
    Zeckendorf { n: Num },
    /// A point whose fractional part lies strictly between those of X and Y
    #[command(allow_negative_numbers = true)]
    Witness { x: Num, y: Num },
    /// K successive witnesses approaching X from Y
    #[command(allow_negative_numbers = true)]
    Refine { x: Num, y: Num, k: usize },
    /// Argmin or argmax of fractional parts over the open interval (LO, HI)
    #[command(allow_negative_numbers = true)]
    #[command(group(ArgGroup::new("kind").required(true).args(["min", "max"])))]
    Extrema {
        #[arg(long)]
        min: bool,
        #[arg(long)]
        max: bool,
        lo: Num,
        hi: Num,
        /// Only points whose fractional part exceeds that of C
        #[arg(long, allow_negative_numbers = true)]
        above: Option<Num>,
        /// Only points whose fractional part is below that of D
        #[arg(long, allow_negative_numbers = true)]
        below: Option<Num>,
    },
    /// Decide a sentence
    #[command(allow_negative_numbers = true)]
    Decide { formula: String },
    /// Evaluate a formula under variable bindings
    #[command(allow_negative_numbers = true)]
    Eval {
        formula: String,
        /// NAME=VALUE, repeatable
        #[arg(long = "bind", value_parser = parse_binding)]
        bindings: Vec<(String, Int)>,
    },
    /// Run the verification suites
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long, default_value_t = 200)]
        bound: u64,
        #[arg(long, default_value_t = 200)]
        random: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also evaluate printed forms of the amended laws
        #[arg(long)]
        paper_literal: bool,
        /// Run only the named suite
        #[arg(long)]
        suite: Option<String>,
    },
    /// Emit (n, f(n), [φn]) rows for FROM ≤ n ≤ TO
    #[command(allow_negative_numbers = true)]
    Plot {
        #[arg(long, allow_negative_numbers = true)]
        from: Num,
        #[arg(long, allow_negative_numbers = true)]
        to: Num,
        #[arg(long, default_value_t = plot::DEFAULT_DIGITS)]
        digits: u32,
        #[arg(long, value_enum)]
        format: PlotFormat,
    },
}

#[derive(Clone, Debug)]
struct Num(Int);

impl std::str::FromStr for Num {
    type Err = String;

    fn from_str(s: &str) -> Result<Num, String> {
        Int::parse_decimal(s).map(Num).map_err(|e| e.to_string())
    }
}

fn parse_binding(s: &str) -> Result<(String, Int), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("binding `{s}` is not NAME=VALUE"))?;
    let v = Int::parse_decimal(value.trim()).map_err(|e| e.to_string())?;
    Ok((name.trim().to_owned(), v))
}

/// A command's result: rows of named fields plus the exit status.
struct Outcome {
    rows: Vec<Vec<(&'static str, Value)>>,
    ok: bool,
}

impl Outcome {
    fn one(fields: Vec<(&'static str, Value)>, ok: bool) -> Outcome {
        Outcome { rows: vec![fields], ok }
    }
}

fn int(v: &Int) -> Value {
    serde_json::to_value(v).expect("integers serialize")
}

fn opt(v: Option<&Int>) -> Value {
    v.map_or(Value::Null, int)
}

fn order_name(o: std::cmp::Ordering) -> &'static str {
    match o {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Error> {
    let mode = cli.output;
    let outcome = match cli.command {
        Command::F { n } => Outcome::one(vec![("n", int(&n.0)), ("f", int(&kernel::beatty_f(&n.0)))], true),
        Command::Fbar { n } => Outcome::one(vec![("n", int(&n.0)), ("fbar", int(&kernel::fbar(&n.0)))], true),
        Command::Finv { n } => {
            let x = kernel::f_inverse(&n.0);
            Outcome::one(vec![("n", int(&n.0)), ("finv", opt(x.as_ref()))], x.is_some())
        }
        Command::Cmp { frac, x, y } => {
            let o = if frac {
                kernel::frac_compare(&x.0, &y.0)
            } else {
                x.0.cmp(&y.0)
            };
            Outcome::one(
                vec![("x", int(&x.0)), ("y", int(&y.0)), ("order", json!(order_name(o)))],
                true,
            )
        }
        Command::Fibfloor { n } => Outcome::one(vec![("n", int(&n.0)), ("fibfloor", int(&fib::fibfloor(&n.0)?))], true),
        Command::G { n } => Outcome::one(vec![("n", int(&n.0)), ("g", int(&fib::g_func(&n.0)?))], true),
        Command::Zeckendorf { n } => {
            let idx = fib::zeckendorf(&n.0)?;
            let values: Vec<Value> = idx.iter().map(|&i| int(&fib::zeckendorf_value(&[i]))).collect();
            Outcome::one(
                vec![
                    ("n", int(&n.0)),
                    ("indices", json!(idx)),
                    ("values", Value::Array(values)),
                ],
                true,
            )
        }
        Command::Witness { x, y } => {
            let w = kernel::kronecker_witness(&x.0, &y.0)?;
            Outcome::one(vec![("x", int(&x.0)), ("y", int(&y.0)), ("witness", int(&w))], true)
        }
        Command::Refine { x, y, k } => {
            let chain = kernel::refine(&x.0, &y.0, k)?;
            Outcome {
                rows: chain
                    .iter()
                    .enumerate()
                    .map(|(i, w)| vec![("step", json!(i + 1)), ("witness", int(w))])
                    .collect(),
                ok: true,
            }
        }
        Command::Extrema {
            min,
            lo,
            hi,
            above,
            below,
            ..
        } => {
            let iv = Interval::new(lo.0, hi.0)?;
            let kind = if min { ExtremumKind::Min } else { ExtremumKind::Max };
            let point =
                Extrema::default().filtered(&iv, kind, above.as_ref().map(|c| &c.0), below.as_ref().map(|d| &d.0));
            Outcome::one(
                vec![
                    ("lo", int(iv.lo())),
                    ("hi", int(iv.hi())),
                    ("kind", json!(if min { "min" } else { "max" })),
                    ("point", opt(point.as_ref())),
                ],
                point.is_some(),
            )
        }
        Command::Decide { formula } => {
            let phi = FormulaParser::default().parse_sentence(&formula)?;
            let v = Evaluator::default().decide(&phi)?;
            Outcome::one(vec![("formula", json!(phi.to_string())), ("value", json!(v))], v)
        }
        Command::Eval { formula, bindings } => {
            let phi = FormulaParser::default().parse(&formula)?;
            let env: BTreeMap<String, Int> = bindings.into_iter().collect();
            let v = Evaluator::default().eval(&phi, &env)?;
            Outcome::one(vec![("formula", json!(phi.to_string())), ("value", json!(v))], v)
        }
        Command::Check {
            bound,
            random,
            seed,
            paper_literal,
            suite,
        } => {
            let spec = CheckSpec::new("check", bound, random, seed).literal(paper_literal);
            let reports: Vec<CheckReport> = match suite {
                None => checker::check_all(&spec),
                Some(name) => {
                    let (name, run) = checker::SUITES
                        .iter()
                        .find(|(n, _)| *n == name)
                        .ok_or_else(|| Error::Domain(format!("unknown suite `{name}`")))?;
                    vec![run(&spec.named(name))]
                }
            };
            return write_reports(&reports, mode, out).map_err(io_error);
        }
        Command::Plot {
            from,
            to,
            digits,
            format,
        } => {
            let rows = plot::rows(&from.0, &to.0, digits)?;
            let res = match (mode, format) {
                (OutputMode::Json, _) => rows.iter().try_for_each(|r| {
                    writeln!(
                        out,
                        "{}",
                        json!({"n": int(&r.n), "f_n": int(&r.f_n), "frac_phi_n": r.frac})
                    )
                }),
                (_, PlotFormat::Csv) => plot::write_csv(&rows, &mut *out),
                (_, PlotFormat::SvgPoints) => plot::write_svg_points(&rows, &mut *out),
            };
            res.map_err(io_error)?;
            return Ok(true);
        }
    };
    write_outcome(&outcome, mode, out).map_err(io_error)?;
    Ok(outcome.ok)
}

fn io_error(e: io::Error) -> Error {
    Error::Eval(format!("write failed: {e}"))
}

fn human(v: &Value) -> String {
    match v {
        Value::Null => "none".to_owned(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(human).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn csv_cell(v: &Value) -> String {
    let s = match v {
        Value::Null => String::new(),
        other => human(other),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn write_outcome(o: &Outcome, mode: OutputMode, out: &mut impl Write) -> io::Result<()> {
    match mode {
        OutputMode::Human => {
            for row in &o.rows {
                let (_, v) = row.last().expect("rows are nonempty");
                writeln!(out, "{}", human(v))?;
            }
        }
        OutputMode::Json => {
            for row in &o.rows {
                let obj: serde_json::Map<String, Value> = row.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
                writeln!(out, "{}", Value::Object(obj))?;
            }
        }
        OutputMode::Csv => {
            if let Some(first) = o.rows.first() {
                writeln!(out, "{}", first.iter().map(|(k, _)| *k).collect::<Vec<_>>().join(","))?;
            }
            for row in &o.rows {
                writeln!(
                    out,
                    "{}",
                    row.iter().map(|(_, v)| csv_cell(v)).collect::<Vec<_>>().join(",")
                )?;
            }
        }
    }
    Ok(())
}

fn write_reports(reports: &[CheckReport], mode: OutputMode, out: &mut impl Write) -> io::Result<bool> {
    match mode {
        OutputMode::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        OutputMode::Csv => {
            writeln!(out, "name,instances,counterexamples,pass")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.name,
                    r.instances,
                    r.counterexamples.len(),
                    r.pass()
                )?;
            }
        }
        OutputMode::Human => {
            for r in reports {
                let status = if r.pass() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} ({} instances)", r.name, r.instances)?;
                for c in &r.counterexamples {
                    let tuple: Vec<String> = c.iter().map(Int::to_string).collect();
                    writeln!(out, "  counterexample ({})", tuple.join(", "))?;
                }
                for n in &r.notes {
                    writeln!(out, "  {n}")?;
                }
            }
        }
    }
    Ok(reports.iter().all(CheckReport::pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
