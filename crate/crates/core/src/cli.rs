//! Command-line surface.
//!
//! [`run`] parses arguments and returns the complete output and exit code,
//! so that the binary is a thin wrapper and every command can be tested
//! in-process. Exit codes: 0 success, 1 domain error, 2 usage error,
//! 3 verification failure.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bifuzzy::{BifuzzyValue, Mode};
use crate::format::sig;
use crate::measures::{set_entropy, set_similarity, set_syntropy};
use crate::norm::NormCouple;
use crate::penta::PentaValue;
use crate::setio::BifuzzySet;
use crate::table::{generate_truth_table, reference, Operator};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pentafuzzy",
    version,
    about = "Five-valued representation of bifuzzy values: transforms, truth tables, measures and law verification"
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transform a (mu, nu) pair into its five-valued representation.
    #[command(allow_negative_numbers = true)]
    Transform {
        mu: f64,
        nu: f64,
        #[arg(long, default_value = "standard")]
        mode: Mode,
    },
    /// Generate a truth table from the vector operators.
    Table {
        /// disjunction, conjunction, complement, negation, dual, implication or equivalence
        operator: Operator,
        #[arg(long, default_value = "min_max")]
        couple: NormCouple,
        /// Compare against the reference table and exit 3 on any mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Emit a CSV grid of a measure over the unit square.
    Map {
        #[arg(long, value_enum, default_value = "entropy")]
        measure: MapMeasure,
        #[arg(long, default_value = "standard")]
        mode: Mode,
        /// Number of steps per axis (at least 2).
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=100_000))]
        resolution: u32,
    },
    /// Run the seeded law verifier.
    Verify {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated couples, e.g. `min_max,product,frank(2)`.
        #[arg(long, value_delimiter = ',', default_value = "min_max")]
        couples: Vec<NormCouple>,
    },
    /// Set-level entropy, syntropy or similarity of CSV/JSON set files.
    Set {
        #[arg(value_enum)]
        op: SetOp,
        file1: PathBuf,
        file2: Option<PathBuf>,
        #[arg(long, default_value = "standard")]
        mode: Mode,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapMeasure {
    Entropy,
    Syntropy,
    Ambiguity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SetOp {
    Entropy,
    Syntropy,
    Similarity,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let json = cli.json;
    match cli.command {
        Command::Transform { mu, nu, mode } => transform(mu, nu, mode, json),
        Command::Table {
            operator,
            couple,
            check,
        } => table(operator, couple, check, json),
        Command::Map {
            measure,
            mode,
            resolution,
        } => map(measure, mode, resolution, json),
        Command::Verify {
            samples,
            seed,
            couples,
        } => verify_cmd(samples as usize, seed, couples, json),
        Command::Set {
            op,
            file1,
            file2,
            mode,
        } => set(op, &file1, file2.as_deref(), mode, json),
    }
}

fn to_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value");
    s.push('\n');
    s
}

fn kv(lines: &[(&str, String)]) -> String {
    lines
        .iter()
        .map(|(k, v)| format!("{k:<14}{v}\n"))
        .collect()
}

fn transform(mu: f64, nu: f64, mode: Mode, json: bool) -> Outcome {
    let v = match BifuzzyValue::new(mu, nu) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
    };
    let td = v.tau_delta(mode);
    let x = PentaValue::from_tau_delta(td);
    let class = v.classify();
    let e = x.entropy();
    let g = x.syntropy();
    if json {
        return Outcome::ok(to_json(&json!({
            "mu": mu,
            "nu": nu,
            "mode": mode,
            "tau": td.tau,
            "delta": td.delta,
            "t": x.t(),
            "f": x.f(),
            "c": x.c(),
            "u": x.u(),
            "i": x.i(),
            "classification": class,
            "entropy": x.entropy_scalar(),
            "entropy_vector": e,
            "syntropy": x.syntropy_scalar(),
            "syntropy_vector": g,
        })));
    }
    Outcome::ok(kv(&[
        ("mu", sig(mu)),
        ("nu", sig(nu)),
        ("mode", mode.to_string()),
        ("tau", sig(td.tau)),
        ("delta", sig(td.delta)),
        ("t", sig(x.t())),
        ("f", sig(x.f())),
        ("c", sig(x.c())),
        ("u", sig(x.u())),
        ("i", sig(x.i())),
        ("class", class.kind.to_string()),
        ("index", sig(class.index)),
        ("entropy", sig(x.entropy_scalar())),
        (
            "entropy_vec",
            format!("c={} u={} i={}", sig(e.c), sig(e.u), sig(e.i)),
        ),
        ("syntropy", sig(x.syntropy_scalar())),
        ("syntropy_vec", format!("t={} f={}", sig(g.t), sig(g.f))),
    ]))
}

fn table(operator: Operator, couple: NormCouple, check: bool, json: bool) -> Outcome {
    let generated = match generate_truth_table(operator, couple) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_VERIFY, format!("error: {e}\n")),
    };
    let number = operator.table_number();
    let total = generated.cell_count();
    let mismatches = if check {
        generated.diff(&reference::table(operator))
    } else {
        Vec::new()
    };
    let matched = total - mismatches.len();
    let code = if mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    let stdout = if json {
        let mut doc = json!({
            "operator": operator,
            "couple": couple,
            "table": generated,
        });
        if check {
            doc["check"] = json!({
                "table": number,
                "matched": matched,
                "total": total,
                "ok": mismatches.is_empty(),
                "mismatches": mismatches,
            });
        }
        to_json(&doc)
    } else {
        let mut out = generated.render();
        if check {
            if mismatches.is_empty() {
                out.push_str(&format!("OK: {matched}/{total} cells match Table {number}\n"));
            } else {
                out.push_str(&format!(
                    "MISMATCH: {matched}/{total} cells match Table {number}\n"
                ));
                for m in &mismatches {
                    out.push_str(&format!("  {m}\n"));
                }
            }
        }
        out
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn map(measure: MapMeasure, mode: Mode, resolution: u32, json: bool) -> Outcome {
    let n = resolution as f64;
    let mut rows = Vec::with_capacity(((resolution + 1) * (resolution + 1)) as usize);
    for i in 0..=resolution {
        for j in 0..=resolution {
            let (mu, nu) = (i as f64 / n, j as f64 / n);
            let x = PentaValue::from_bifuzzy(
                BifuzzyValue::new(mu, nu).expect("grid point in range"),
                mode,
            );
            let value = match measure {
                MapMeasure::Entropy => x.entropy_scalar(),
                MapMeasure::Syntropy => x.syntropy_scalar(),
                MapMeasure::Ambiguity => x.i(),
            };
            rows.push((mu, nu, value));
        }
    }
    if json {
        let points: Vec<_> = rows
            .iter()
            .map(|&(mu, nu, value)| json!({"mu": mu, "nu": nu, "value": value}))
            .collect();
        let name = match measure {
            MapMeasure::Entropy => "entropy",
            MapMeasure::Syntropy => "syntropy",
            MapMeasure::Ambiguity => "ambiguity",
        };
        return Outcome::ok(to_json(&json!({
            "measure": name,
            "mode": mode,
            "resolution": resolution,
            "points": points,
        })));
    }
    let mut out = String::from("mu,nu,value\n");
    for (mu, nu, value) in rows {
        out.push_str(&format!("{},{},{}\n", sig(mu), sig(nu), sig(value)));
    }
    Outcome::ok(out)
}

fn verify_cmd(samples: usize, seed: u64, couples: Vec<NormCouple>, json: bool) -> Outcome {
    let report = verify::run(&VerifyConfig {
        samples,
        seed,
        couples,
    });
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    let stdout = if json {
        to_json(&serde_json::to_value(&report).expect("serializable report"))
    } else {
        report.render()
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn set(
    op: SetOp,
    file1: &std::path::Path,
    file2: Option<&std::path::Path>,
    mode: Mode,
    json: bool,
) -> Outcome {
    let load = |p: &std::path::Path| BifuzzySet::load(p);
    let s1 = match load(file1) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
    };
    match op {
        SetOp::Entropy => {
            if file2.is_some() {
                return Outcome::fail(EXIT_USAGE, "error: entropy takes one file\n".to_owned());
            }
            let e = set_entropy(&s1, mode);
            if json {
                return Outcome::ok(to_json(&json!({
                    "set": s1.name(),
                    "mode": mode,
                    "elements": e.count,
                    "entropy": e.scalar,
                    "vector": e.vector,
                    "mean": e.mean(),
                })));
            }
            Outcome::ok(kv(&[
                ("set", s1.name().to_owned()),
                ("mode", mode.to_string()),
                ("elements", e.count.to_string()),
                ("entropy_sum", sig(e.scalar)),
                (
                    "entropy_vec",
                    format!(
                        "c={} u={} i={}",
                        sig(e.vector.c),
                        sig(e.vector.u),
                        sig(e.vector.i)
                    ),
                ),
                ("entropy_mean", sig(e.mean())),
            ]))
        }
        SetOp::Syntropy => {
            if file2.is_some() {
                return Outcome::fail(EXIT_USAGE, "error: syntropy takes one file\n".to_owned());
            }
            let g = set_syntropy(&s1, mode);
            if json {
                return Outcome::ok(to_json(&json!({
                    "set": s1.name(),
                    "mode": mode,
                    "elements": g.count,
                    "syntropy": g.scalar,
                    "vector": g.vector,
                    "mean": g.mean(),
                })));
            }
            Outcome::ok(kv(&[
                ("set", s1.name().to_owned()),
                ("mode", mode.to_string()),
                ("elements", g.count.to_string()),
                ("syntropy_sum", sig(g.scalar)),
                (
                    "syntropy_vec",
                    format!("t={} f={}", sig(g.vector.t), sig(g.vector.f)),
                ),
                ("syntropy_mean", sig(g.mean())),
            ]))
        }
        SetOp::Similarity => {
            let Some(file2) = file2 else {
                return Outcome::fail(
                    EXIT_USAGE,
                    "error: similarity needs two files\n".to_owned(),
                );
            };
            let s2 = match load(file2) {
                Ok(s) => s,
                Err(e) => return Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
            };
            match set_similarity(&s1, &s2, mode) {
                Ok(s) if json => Outcome::ok(to_json(&json!({
                    "first": s1.name(),
                    "second": s2.name(),
                    "mode": mode,
                    "elements": s1.len(),
                    "similarity": s,
                }))),
                Ok(s) => Outcome::ok(kv(&[
                    ("first", s1.name().to_owned()),
                    ("second", s2.name().to_owned()),
                    ("mode", mode.to_string()),
                    ("elements", s1.len().to_string()),
                    ("similarity", sig(s)),
                ])),
                Err(e) => Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
            }
        }
    }
}
