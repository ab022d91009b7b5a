//! `cubedet` command-line front end.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage or input error.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use cubedet_core::io::{scalar_to_json, serialize_json, serialize_text};
use cubedet_core::verify::{
    batch_verify_with_sign, cross_check_with_sign, random_cubic, BatchSummary, GenSpec, VerifyReport,
};
use cubedet_core::{
    cofactor, det_closed, det_laplace, det_permutation, expand, minor, parse_auto, sign_definitional,
    sign_expansion, Axis, CubicMatrix, ExpansionTrace, Index3, Sign, SignConvention,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cubedet", version, about = "Exact determinants of cubic 3-index matrices (orders 1-3)")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Perm,
    Laplace,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AxisArg {
    /// horizontal layer (fixed i)
    H,
    /// vertical page (fixed j)
    P,
    /// vertical layer (fixed k)
    L,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::H => Axis::HorizontalLayer,
            AxisArg::P => Axis::VerticalPage,
            AxisArg::L => Axis::VerticalLayer,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    /// (-1)^(j+k), consistent with every layer expansion
    Expansion,
    /// (-1)^(i+j+k)
    #[value(alias = "paper-def")]
    Definitional,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Fault {
    NegatedSign,
    DefinitionalSign,
}

impl Fault {
    fn sign(self) -> fn(Index3) -> Sign {
        match self {
            Fault::NegatedSign => |at| sign_expansion(at).negate(),
            Fault::DefinitionalSign => sign_definitional,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the determinant
    Det {
        /// Matrix file (text or JSON); "-" reads stdin
        file: String,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
        #[arg(long)]
        index: Option<usize>,
        /// Print the expansion trace (Laplace method)
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the minor M_ijk
    Minor {
        file: String,
        i: usize,
        j: usize,
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the cofactor C_ijk
    Cofactor {
        file: String,
        i: usize,
        j: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "expansion")]
        convention: ConventionArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the full expansion trace along one layer
    Expand {
        file: String,
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every determinant route on a file or on seeded random matrices
    Verify {
        #[arg(conflicts_with = "random", required_unless_present = "random")]
        file: Option<String>,
        #[arg(long)]
        random: bool,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        range: i64,
        #[arg(long)]
        json: bool,
        /// Replace the top-level expansion sign with a wrong one, to check
        /// that the harness notices.
        #[arg(long, value_enum, hide = true)]
        fault: Option<Fault>,
    },
    /// Print a seeded random matrix in canonical text form
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        range: i64,
        #[arg(long)]
        json: bool,
    },
}

/// A failure that maps onto an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<cubedet_core::Error> for Failure {
    fn from(e: cubedet_core::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(format!("i/o error: {e}"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, file: &str) -> Result<CubicMatrix, Failure> {
        let text = if file == "-" {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf)?;
            buf
        } else {
            fs::read_to_string(file).map_err(|e| Failure::input(format!("{file}: cannot read: {e}")))?
        };
        let name = if file == "-" { "<stdin>" } else { file };
        parse_auto(&text).map_err(|e| Failure::input(format!("{name}: {e}")))
    }
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Det { file, method, axis, index, trace, json } => {
            let a = io.load(&file)?;
            let laplace_args = axis.is_some() || index.is_some() || trace;
            let method = match method {
                Some(Method::Laplace) | None if laplace_args => Method::Laplace,
                Some(m) if laplace_args => {
                    return Err(Failure::input(
                        format!("--axis, --index and --trace require --method laplace, not {m:?}")
                            .to_lowercase(),
                    ))
                }
                Some(m) => m,
                None => Method::Closed,
            };
            let axis: Axis = axis.unwrap_or(AxisArg::H).into();
            let index = index.unwrap_or(1);
            let value = match method {
                Method::Closed => det_closed(&a)?,
                Method::Perm => det_permutation(&a)?,
                Method::Laplace => det_laplace(&a, axis, index)?,
            };
            let tr = if trace { Some(expand(&a, axis, index)?) } else { None };
            if json {
                let mut doc = json!({
                    "method": format!("{method:?}").to_lowercase(),
                    "determinant": scalar_to_json(value),
                });
                if let Some(t) = &tr {
                    doc["trace"] = trace_json(t);
                }
                writeln!(io.out, "{doc}")?;
            } else {
                if let Some(t) = &tr {
                    write!(io.out, "{}", render_trace(t))?;
                }
                writeln!(io.out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Minor { file, i, j, k, json } => {
            let a = io.load(&file)?;
            let at = Index3::new(i, j, k);
            let value = minor(&a, at)?;
            if json {
                writeln!(io.out, "{}", json!({ "at": [i, j, k], "minor": scalar_to_json(value) }))?;
            } else {
                writeln!(io.out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Cofactor { file, i, j, k, convention, json } => {
            let a = io.load(&file)?;
            let convention = match convention {
                ConventionArg::Expansion => SignConvention::Expansion,
                ConventionArg::Definitional => SignConvention::Definitional,
            };
            let c = cofactor(&a, Index3::new(i, j, k), convention)?;
            if convention == SignConvention::Definitional {
                writeln!(io.err, "note: definitional sign (-1)^(i+j+k); layer expansions use (-1)^(j+k)")?;
            }
            if json {
                let doc = json!({
                    "at": [i, j, k],
                    "convention": convention.to_string(),
                    "cofactor": scalar_to_json(c.value),
                });
                writeln!(io.out, "{doc}")?;
            } else {
                writeln!(io.out, "{}", c.value)?;
            }
            Ok(EXIT_OK)
        }
        Command::Expand { file, axis, index, json } => {
            let a = io.load(&file)?;
            let t = expand(&a, axis.into(), index)?;
            if json {
                writeln!(io.out, "{}", trace_json(&t))?;
            } else {
                write!(io.out, "{}", render_trace(&t))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, random, orders, trials, seed, range, json, fault } => {
            let sign = fault.map_or(sign_expansion as fn(Index3) -> Sign, Fault::sign);
            if random {
                if trials == 0 {
                    return Err(Failure::input("--trials must be at least 1"));
                }
                let summary = batch_verify_with_sign(&orders, trials, seed, range, sign)?;
                if json {
                    writeln!(io.out, "{}", serde_json::to_string(&summary).expect("summary serializes"))?;
                } else {
                    write!(io.out, "{}", render_summary(&summary, &orders, seed, range))?;
                }
                Ok(if summary.passed() { EXIT_OK } else { EXIT_FAIL })
            } else {
                let file = file.expect("clap requires a file without --random");
                let a = io.load(&file)?;
                let report = cross_check_with_sign(&a, sign)?;
                if json {
                    writeln!(io.out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
                } else {
                    write!(io.out, "{}", render_report(&report))?;
                }
                Ok(if report.overall { EXIT_OK } else { EXIT_FAIL })
            }
        }
        Command::Gen { order, seed, range, json } => {
            let a = random_cubic(&GenSpec::new(order, seed, range)?);
            if json {
                writeln!(io.out, "{}", serialize_json(&a))?;
            } else {
                write!(io.out, "{}", serialize_text(&a))?;
            }
            Ok(EXIT_OK)
        }
    }
}

pub fn trace_json(t: &ExpansionTrace) -> Value {
    let terms: Vec<Value> = t
        .terms
        .iter()
        .map(|x| {
            json!({
                "at": [x.at.i, x.at.j, x.at.k],
                "entry": scalar_to_json(x.entry),
                "sign": x.sign.to_string(),
                "minor": scalar_to_json(x.minor_value),
                "contribution": scalar_to_json(x.contribution),
            })
        })
        .collect();
    json!({
        "axis": t.axis.code().to_string(),
        "index": t.index,
        "terms": terms,
        "total": scalar_to_json(t.total),
    })
}

/// Fixed-width table, one row per term, followed by the total.
pub fn render_trace(t: &ExpansionTrace) -> String {
    let header = ["position", "entry", "sign", "minor", "contribution"];
    let rows: Vec<[String; 5]> = t
        .terms
        .iter()
        .map(|x| {
            [
                x.at.to_string(),
                x.entry.to_string(),
                x.sign.to_string(),
                x.minor_value.to_string(),
                x.contribution.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 5]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(c, (cell, w))| if c == 0 { format!("{cell:<w$}") } else { format!("{cell:>w$}") })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = format!("expansion along {} {}\n", t.axis, t.index);
    out.push_str(&line(header));
    out.push('\n');
    for row in &rows {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
        out.push('\n');
    }
    out.push_str(&format!("total {}\n", t.total));
    out
}

pub fn render_report(r: &VerifyReport) -> String {
    let mut out = format!("subject {}\ndeterminant {}\n", r.subject, r.det_value);
    for p in &r.paths {
        out.push_str(&format!("path {} {} {}\n", p.name, p.value, if p.agrees { "ok" } else { "MISMATCH" }));
    }
    for l in &r.derived_laws {
        out.push_str(&format!("law {} {}\n", l.name, if l.pass { "pass" } else { "FAIL" }));
    }
    out.push_str(if r.overall { "overall PASS\n" } else { "overall FAIL\n" });
    out
}

pub fn render_summary(s: &BatchSummary, orders: &[usize], seed: u64, range: i64) -> String {
    let orders: Vec<String> = orders.iter().map(usize::to_string).collect();
    let mut out = format!(
        "trials {} (orders {}, seed {seed}, range {range})\nfailures {}\n",
        s.trials_run,
        orders.join(","),
        s.failures.len()
    );
    if let Some(f) = s.first_failure() {
        out.push_str(&format!(
            "first failure: trial {}: cubedet gen {} ({})\n",
            f.trial,
            f.spec,
            f.failing.join(", ")
        ));
    }
    out.push_str(if s.passed() { "result PASS\n" } else { "result FAIL\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubedet_core::examples::example1;

    #[test]
    fn trace_table_layout() {
        let t = expand(&example1(), Axis::HorizontalLayer, 1).unwrap();
        let expected = "\
expansion along horizontal layer 1
position  entry  sign  minor  contribution
(1,1,1)       4     +      3            12
(1,2,1)      -3     -     -7           -21
(1,1,2)      -2     -      5            10
(1,2,2)       4     +     -1            -4
total -3
";
        assert_eq!(render_trace(&t), expected);
    }

    #[test]
    fn trace_json_shape() {
        let t = expand(&example1(), Axis::VerticalPage, 2).unwrap();
        let v = trace_json(&t);
        assert_eq!(v["axis"], "p");
        assert_eq!(v["total"], -3);
        assert_eq!(v["terms"].as_array().unwrap().len(), 4);
        assert_eq!(v["terms"][0]["at"], json!([1, 2, 1]));
    }
}
