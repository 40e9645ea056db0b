//! The `hsd-codes` command line: one subcommand per pipeline stage, JSON or
//! CSV on stdout (or `--output`), error JSON on stderr.
//!
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage error.

mod pipeline;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codes::{
    is_hermitian_self_dual, is_hermitian_self_orthogonal, GeneratorMatrix, GroupAlgebra, ZeroSet,
};
use crate::counting::{self, CountingReport};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupShape};
use crate::splitting::{build_splitting, exists_hsd, q2_orbits};

pub use pipeline::{pipeline_selfdual, pipeline_selfdual_with, SelfDualReport};

#[derive(Parser, Debug)]
#[command(
    name = "hsd-codes",
    version,
    about = "Hermitian self-dual extended abelian group codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Prime power q; codes live over GF(q^2).
    #[arg(long)]
    q: u64,
    /// Abelian group as cyclic factors, e.g. `3x9`; `1` is the trivial group.
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Part {
    C0,
    C1,
    C0z,
    C1z,
    Cz,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether abelian groups of order n carry self-dual extended split codes.
    Exists {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// The <tau_(q^2)>-orbits of a group.
    Orbits {
        #[command(flatten)]
        g: GroupArgs,
    },
    /// The canonical splitting by -q.
    Split {
        #[command(flatten)]
        g: GroupArgs,
        /// List every element of X0 and X1, not just orbit representatives.
        #[arg(long)]
        expand: bool,
    },
    /// Generator matrix of an ideal code I_X over GF(q^2).
    Code {
        #[command(flatten)]
        g: GroupArgs,
        /// Zero set as `;`-separated elements, e.g. `1,2;0,3`.
        #[arg(long, conflicts_with = "part")]
        zeros: Option<String>,
        /// One of the codes attached to the canonical splitting.
        #[arg(long, value_enum)]
        part: Option<Part>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Extend C0 by the gamma column and check Hermitian self-duality.
    Extend {
        #[command(flatten)]
        g: GroupArgs,
        /// Encoding of gamma in GF(q^2); defaults to the smallest solution.
        #[arg(long)]
        gamma: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check Hermitian self-duality of a matrix file.
    VerifyDual {
        #[arg(long)]
        input: PathBuf,
    },
    /// HSD(x): sum of a(n) over the friendly semigroup up to x.
    CountHsd {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: u64,
        /// Constant for the predicted main term b0 x / log^delta x.
        #[arg(long)]
        b0: Option<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Density delta(q) of the non-friendly primes.
    Density {
        #[arg(long)]
        q: u64,
    },
    /// Number of friendly primes up to x.
    PqCount {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sum of a(n) for n up to x.
    Asum {
        #[arg(long)]
        x: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number of distinct values of a(n) for n up to x.
    Distinct {
        #[arg(long)]
        x: u64,
        /// Restrict to the friendly semigroup for q.
        #[arg(long)]
        q: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The extremal family n_r = (p_1 ... p_r)^4.
    Maxorder {
        #[arg(long)]
        r: usize,
        /// Use the friendly primes for q instead of all primes.
        #[arg(long)]
        q: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Estimates of b0 = HSD(x) log^delta x / x at several x.
    FitB0 {
        #[arg(long)]
        q: u64,
        /// Comma-separated sample points.
        #[arg(long, value_delimiter = ',', required = true)]
        xs: Vec<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the command line; `argv` includes the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let mut body = json!({ "error": e.kind(), "message": e.to_string() });
            if let Error::Obstructed(ob) = &e {
                body["obstruction"] = serde_json::to_value(ob).expect("obstruction serializes");
            }
            let _ = writeln!(err, "{body}");
            1
        }
    }
}

fn parse_group(s: &str) -> Result<GroupShape> {
    s.parse()
}

/// Parses `1,2;0,3` (parentheses optional) into element indices.
fn parse_zero_set(spec: &str, g: &GroupShape) -> Result<ZeroSet> {
    let bad = || Error::InvalidArgument(format!("malformed zero set {spec:?}"));
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let inner = item.trim_start_matches('(').trim_end_matches(')');
        let coords: Vec<u64> = inner
            .split(',')
            .map(|c| c.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if coords.len() != g.rank() || coords.iter().zip(g.factors()).any(|(&c, &m)| c >= m) {
            return Err(bad());
        }
        out.push(g.index_of(&GroupElement(coords)));
    }
    Ok(ZeroSet::new(out))
}

fn format_or(out: &OutputArgs, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = out.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(format!(
            "format {f:?} is not available for this subcommand"
        )))
    }
}

fn emit(text: &str, dest: Option<&OutputArgs>, out: &mut dyn Write) -> CliResult<()> {
    let io = |e: std::io::Error| Failure::Domain(Error::Internal(format!("write failed: {e}")));
    match dest.and_then(|d| d.output.as_ref()) {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn emit_json(v: &Value, dest: Option<&OutputArgs>, out: &mut dyn Write) -> CliResult<()> {
    emit(&format!("{v}\n"), dest, out)
}

fn emit_report(r: &CountingReport, o: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    match format_or(o, Format::Json, &[Format::Json, Format::Csv])? {
        Format::Csv => {
            let mut buf = Vec::new();
            counting::write_csv(std::slice::from_ref(r), &mut buf)?;
            emit(&String::from_utf8(buf).expect("csv is utf-8"), Some(o), out)
        }
        _ => emit_json(&r.to_json(), Some(o), out),
    }
}

fn progress(err: &mut dyn Write, x: u64, what: &str) {
    if x >= 10_000_000 {
        let _ = writeln!(err, "{what} up to {x}...");
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Exists { q, n } => {
            let r = exists_hsd(n, q)?;
            let primes: Vec<Value> = r
                .primes
                .iter()
                .map(|p| json!({ "r": p.r, "ord": p.ord, "verdict": p.verdict }))
                .collect();
            emit_json(
                &json!({ "n": n, "q": q, "exists": r.exists, "primes": primes }),
                None,
                out,
            )
        }
        Command::Orbits { g } => {
            let group = parse_group(&g.group)?;
            let orbits = q2_orbits(&group, g.q)?;
            let list: Vec<Vec<GroupElement>> = (0..orbits.len())
                .map(|i| orbits.orbit_elements(i, &group))
                .collect();
            let v = json!({
                "group": group.to_string(),
                "q": g.q,
                "multiplier": orbits.multiplier(),
                "orbits": list,
            });
            emit_json(&v, None, out)
        }
        Command::Split { g, expand } => {
            let group = parse_group(&g.group)?;
            let sp = build_splitting(&group, g.q)?;
            emit_json(&sp.to_json(expand)?, None, out)
        }
        Command::Code {
            g,
            zeros,
            part,
            out: o,
        } => {
            let group = parse_group(&g.group)?;
            let alg = GroupAlgebra::new(&group, g.q)?;
            let code = match (zeros, part) {
                (Some(z), _) => alg.code_from_zero_set(&parse_zero_set(&z, &group)?)?,
                (None, part) => {
                    let codes = alg.split_codes(&build_splitting(&group, g.q)?)?;
                    match part.unwrap_or(Part::C0) {
                        Part::C0 => codes.c0,
                        Part::C1 => codes.c1,
                        Part::C0z => codes.c0z,
                        Part::C1z => codes.c1z,
                        Part::Cz => codes.cz,
                    }
                }
            };
            match format_or(&o, Format::Matrix, &[Format::Matrix, Format::Json])? {
                Format::Matrix => emit(&code.generator().to_matrix_file(), Some(&o), out),
                _ => {
                    let zs: Vec<GroupElement> = code
                        .zero_set()
                        .as_slice()
                        .iter()
                        .map(|&i| group.element(i))
                        .collect();
                    let rows: Vec<&[u32]> = code.generator().matrix().row_iter().collect();
                    let v = json!({
                        "group": group.to_string(),
                        "q": g.q,
                        "zeros": zs,
                        "length": code.length(),
                        "dimension": code.dimension(),
                        "rows": rows,
                    });
                    emit_json(&v, Some(&o), out)
                }
            }
        }
        Command::Extend { g, gamma, out: o } => {
            let group = parse_group(&g.group)?;
            let report = pipeline_selfdual_with(&group, g.q, gamma)?;
            match format_or(&o, Format::Json, &[Format::Json, Format::Matrix])? {
                Format::Matrix => {
                    emit(&report.extended.generator().to_matrix_file(), Some(&o), out)
                }
                _ => emit_json(&report.to_json()?, Some(&o), out),
            }
        }
        Command::VerifyDual { input } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Error::BadMatrixFile(format!("{}: {e}", input.display())))?;
            let m = GeneratorMatrix::from_matrix_file(&text)?;
            let v = json!({
                "length": m.length(),
                "rows": m.rows(),
                "rank": m.rank(),
                "self_orthogonal": is_hermitian_self_orthogonal(&m)?,
                "self_dual": is_hermitian_self_dual(&m)?,
            });
            emit_json(&v, None, out)
        }
        Command::CountHsd { q, x, b0, out: o } => {
            progress(err, x, "counting HSD");
            emit_report(&counting::hsd_count(x, q, b0)?, &o, out)
        }
        Command::Density { q } => {
            let v = json!({
                "q": q,
                "delta": counting::density_delta(q)?.to_string(),
                "tau": counting::friendly_density(q)?.to_string(),
            });
            emit_json(&v, None, out)
        }
        Command::PqCount { q, x, out: o } => {
            progress(err, x, "classifying primes");
            emit_report(&counting::pq_count(x, q)?, &o, out)
        }
        Command::Asum { x, out: o } => {
            progress(err, x, "summing a(n)");
            emit_report(&counting::abelian_sum(x)?, &o, out)
        }
        Command::Distinct { x, q, out: o } => {
            progress(err, x, "collecting values of a(n)");
            emit_report(&counting::distinct_values(x, q)?, &o, out)
        }
        Command::Maxorder { r, q, out: o } => {
            let rep = counting::max_order_suite(r, q)?;
            match format_or(&o, Format::Json, &[Format::Json, Format::Csv])? {
                Format::Csv => {
                    let mut s =
                        String::from("r,primes,log_n,a,A,count_to_A,exact_match,kratzel_ratio\n");
                    for row in &rep.rows {
                        let primes: Vec<String> = row.primes.iter().map(u64::to_string).collect();
                        s += &format!(
                            "{},{},{},{},{},{},{},{}\n",
                            row.r,
                            primes.join(" "),
                            counting::fmt12(row.log_n),
                            row.a,
                            row.big_a,
                            row.count_to_a,
                            row.exact_match,
                            counting::fmt12(row.kratzel_ratio)
                        );
                    }
                    emit(&s, Some(&o), out)
                }
                _ => {
                    let mut v = serde_json::to_value(&rep).expect("report serializes");
                    round_floats(&mut v);
                    emit_json(&v, Some(&o), out)
                }
            }
        }
        Command::FitB0 { q, xs, out: o } => {
            progress(err, xs.iter().copied().max().unwrap_or(0), "fitting b0");
            let fit = counting::hsd_fit(&xs, q)?;
            match format_or(&o, Format::Json, &[Format::Json, Format::Csv])? {
                Format::Csv => {
                    let mut s = String::from("x,hsd,b0_hat\n");
                    for smp in &fit.samples {
                        s += &format!("{},{},{}\n", smp.x, smp.hsd, counting::fmt12(smp.b0_hat));
                    }
                    emit(&s, Some(&o), out)
                }
                _ => {
                    let mut v = serde_json::to_value(&fit).expect("report serializes");
                    round_floats(&mut v);
                    emit_json(&v, Some(&o), out)
                }
            }
        }
    }
}

/// Rounds every float in a JSON tree to 12 significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let r = counting::round12(n.as_f64().expect("f64"));
            *v = json!(r);
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}
