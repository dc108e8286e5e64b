//! Command-line front end.
//!
//! [`parse`] turns an argument vector into a [`Request`]; [`run`] executes
//! it and returns the exit code with the rendered output. Neither touches
//! the process, so both are testable in isolation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gvfp::{normalize, stable_gd, Bound, HopfMultiple};
use crate::intk::{field_ranks, k_groups, IntegralCohomology};
use crate::manifold::{self, InvariantReport};
use crate::mod2::{self, Mod2Class};
use crate::splitting::{self, StuntedSummand};
use crate::tuple::Tuple;

/// Listing summands is exponential in `r`; beyond this we refuse.
const MAX_LISTED_SUMMANDS_R: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Z2,
    Z,
    Q,
    /// `Z/p`; primality is checked when the request runs.
    P(u64),
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "z2" => Ok(Coefficients::Z2),
            "z" => Ok(Coefficients::Z),
            "q" => Ok(Coefficients::Q),
            _ => s
                .strip_prefix("p:")
                .and_then(|p| p.parse().ok())
                .map(Coefficients::P)
                .ok_or_else(|| format!("expected z2, z, q or p:<prime>, got {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Every invariant of P_n at once.
    Report { tuple: Tuple },
    /// Cohomology groups or ranks.
    Cohomology {
        tuple: Tuple,
        #[arg(long, default_value = "z2")]
        coeff: Coefficients,
        #[arg(long)]
        degree: Option<u64>,
    },
    /// Steenrod square Sq^k of a mod-2 class, e.g. `sq 2,3 1 --on "y*x{2}"`.
    Sq {
        tuple: Tuple,
        k: u64,
        #[arg(long)]
        on: String,
    },
    /// K^0 and K^1.
    Ktheory { tuple: Tuple },
    /// Stable wedge summands.
    Splitting { tuple: Tuple },
    /// Geometric dimension of kξ_n with provenance.
    #[command(allow_negative_numbers = true)]
    Gvfp { k: i64, n: u32 },
    /// Immersion dimension bounds.
    Imm { tuple: Tuple },
    /// Span and stable span bounds.
    Span { tuple: Tuple },
    /// The δ table for n_1 <= 7.
    Table1,
    /// One report per line of a file of tuples, as JSON lines.
    Batch { path: PathBuf },
}

#[derive(Debug, Parser)]
#[command(
    name = "ppspace",
    version,
    about = "Invariants of projective product spaces"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_enum, env = "PPSPACE_FORMAT")]
    format: Option<Format>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub format: Format,
}

/// A rejected command line: the rendered message and the exit code
/// (0 for `--help` and `--version`, 2 otherwise).
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    pub code: i32,
}

pub fn parse<I, T>(argv: I) -> std::result::Result<Request, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| UsageError {
        message: e.render().to_string(),
        code: if e.use_stderr() { 2 } else { 0 },
    })?;
    let format = if args.json {
        Format::Json
    } else {
        args.format.unwrap_or(Format::Text)
    };
    Ok(Request {
        command: args.command,
        format,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(req: &Request) -> Outcome {
    if let Command::Batch { path } = &req.command {
        return run_batch(path);
    }
    match execute(&req.command, req.format) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: &Command, format: Format) -> Result<String> {
    let json = format == Format::Json;
    Ok(match command {
        Command::Report { tuple } => {
            let r = manifold::report(tuple)?;
            if json {
                to_json(&r)
            } else {
                report_text(&r)
            }
        }
        Command::Cohomology {
            tuple,
            coeff,
            degree,
        } => cohomology(tuple, *coeff, *degree, json)?,
        Command::Sq { tuple, k, on } => {
            let u = Mod2Class::parse(tuple, on)?;
            let v = mod2::sq(tuple, *k, &u)?;
            if json {
                to_json(&json!({ "k": k, "on": u.to_string(), "result": v.to_string() }))
            } else {
                format!("Sq^{k}({u}) = {v}\n")
            }
        }
        Command::Ktheory { tuple } => {
            let (k0, k1) = k_groups(tuple);
            if json {
                to_json(&json!({ "k0": k0, "k1": k1 }))
            } else {
                format!("K^0 = {k0}\nK^1 = {k1}\n")
            }
        }
        Command::Splitting { tuple } => {
            if tuple.len() > MAX_LISTED_SUMMANDS_R {
                return Err(Error::UnsupportedRange(format!(
                    "listing 2^{} summands is not supported; r must be at most {MAX_LISTED_SUMMANDS_R}",
                    tuple.len() - 1
                )));
            }
            let summands = splitting::wedge_summands(tuple);
            if json {
                to_json(&summands)
            } else {
                splitting_text(&summands)
            }
        }
        Command::Gvfp { k, n } => {
            let hm = HopfMultiple::new(*k, *n)?;
            let bound = stable_gd(hm)?;
            if json {
                to_json(&GvfpOutput {
                    bound: &bound,
                    k: *k,
                    n: *n,
                    residue: normalize(hm).residue.to_string(),
                })
            } else {
                let mut s = format!("gd({k}ξ_{n}) = {bound}\n");
                for f in &bound.provenance {
                    let _ = writeln!(s, "  {:<16} [{}, {}]  {}", f.rule, f.lower, f.upper, f.note);
                }
                s
            }
        }
        Command::Imm { tuple } => {
            let b = manifold::imm_bounds(tuple)?;
            if json {
                to_json(&b)
            } else {
                format!("imm{tuple} = {b}\n")
            }
        }
        Command::Span { tuple } => {
            let s = manifold::span_bounds(tuple)?;
            if json {
                to_json(&s)
            } else {
                let case = serde_json::to_value(s.exactness_case).expect("serializable");
                format!(
                    "span{tuple} = {} ({})\nstablespan{tuple} = {}\n",
                    s.span,
                    case.as_str().unwrap_or_default(),
                    s.stablespan
                )
            }
        }
        Command::Table1 => {
            if json {
                to_json(&json!({ "rows": manifold::delta_table() }))
            } else {
                manifold::delta_table_text()
            }
        }
        Command::Batch { .. } => unreachable!("handled by run"),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let canon = if r.tuple.was_canonicalized() {
        " (canonicalized)"
    } else {
        ""
    };
    let _ = writeln!(s, "tuple            {}{canon}", r.tuple);
    let _ = writeln!(s, "dimension        {}", r.dimension);
    let _ = writeln!(s, "orientable       {}", yes_no(r.orientable));
    let _ = writeln!(s, "euler_char       {}", r.euler_char);
    if let Some(c) = r.kervaire_semichar {
        let _ = writeln!(s, "semichar         {c}");
    }
    let _ = writeln!(s, "parallelizable   {}", yes_no(r.parallelizable));
    let _ = writeln!(s, "imm              {}", r.imm);
    let _ = writeln!(s, "stablespan       {}", r.span_result.stablespan);
    let case = serde_json::to_value(r.span_result.exactness_case).expect("serializable");
    let _ = writeln!(
        s,
        "span             {} ({})",
        r.span_result.span,
        case.as_str().unwrap_or_default()
    );
    let f = &r.sphere_factors;
    let spheres: String = f.spheres.iter().map(|n| format!(" x S^{n}")).collect();
    let _ = writeln!(
        s,
        "sphere_factors   {:?} -> P{}{spheres}",
        f.indices, f.remaining
    );
    let _ = writeln!(s, "wedge_summands   {}", r.wedge_summand_count);
    let ranks: Vec<String> = r.mod2_ranks.iter().map(u128::to_string).collect();
    let _ = writeln!(s, "mod2_ranks       {}", ranks.join(" "));
    s
}

fn splitting_text(summands: &[StuntedSummand]) -> String {
    summands
        .iter()
        .map(|s| format!("{:?}  {s}\n", s.u_indices))
        .collect()
}

fn cohomology(t: &Tuple, coeff: Coefficients, degree: Option<u64>, json: bool) -> Result<String> {
    let degrees: Vec<u64> = match degree {
        Some(d) => vec![d],
        None => (0..=t.dim()).collect(),
    };
    let label = match coeff {
        Coefficients::Z2 => "Z/2".to_string(),
        Coefficients::Z => "Z".to_string(),
        Coefficients::Q => "Q".to_string(),
        Coefficients::P(p) => format!("Z/{p}"),
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    match coeff {
        Coefficients::Z => {
            let h = IntegralCohomology::new(t);
            for &d in &degrees {
                let g = h.group(d);
                let _ = writeln!(text, "H^{d}({t}; Z) = {g}");
                rows.push(json!({ "degree": d, "group": g }));
            }
        }
        Coefficients::Z2 => {
            let ranks = mod2::poincare_poly(t);
            for &d in &degrees {
                let rank = ranks.get(d as usize).copied().unwrap_or(0);
                let _ = write!(text, "H^{d}({t}; Z/2) rank {rank}");
                if degree.is_some() {
                    let basis: Vec<String> =
                        mod2::basis(t, d).iter().map(|m| m.to_string()).collect();
                    let _ = write!(text, ": {}", basis.join(", "));
                    rows.push(json!({ "degree": d, "rank": rank, "basis": basis }));
                } else {
                    rows.push(json!({ "degree": d, "rank": rank }));
                }
                text.push('\n');
            }
        }
        Coefficients::Q | Coefficients::P(_) => {
            let characteristic = match coeff {
                Coefficients::P(p) => p,
                _ => 0,
            };
            let ranks = field_ranks(t, characteristic)?;
            for &d in &degrees {
                let rank = ranks.get(d as usize).copied().unwrap_or(0);
                let _ = writeln!(text, "H^{d}({t}; {label}) rank {rank}");
                rows.push(json!({ "degree": d, "rank": rank }));
            }
        }
    }
    Ok(if json {
        let out = match degree {
            Some(_) => rows.pop().expect("one degree requested"),
            None => json!(rows),
        };
        to_json(&out)
    } else {
        text
    })
}

#[derive(Serialize)]
struct GvfpOutput<'a> {
    #[serde(flatten)]
    bound: &'a Bound,
    k: i64,
    n: u32,
    /// decimal, since it can exceed 64 bits
    residue: String,
}

#[derive(Serialize)]
struct BatchError {
    line: usize,
    input: String,
    error: String,
}

/// Rows are processed in parallel and emitted in input order, one compact
/// JSON report per line, followed by `{"errors": [...]}`. Blank lines and
/// lines starting with `#` are skipped.
fn run_batch(path: &PathBuf) -> Outcome {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot read {}: {e}\n", path.display()),
            }
        }
    };
    let rows: Vec<(usize, &str)> = content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<std::result::Result<String, BatchError>> = rows
        .par_iter()
        .map(|&(line, input)| {
            input
                .parse::<Tuple>()
                .and_then(|t| manifold::report(&t))
                .map(|r| serde_json::to_string(&r).expect("serializable"))
                .map_err(|e| BatchError {
                    line,
                    input: input.to_string(),
                    error: e.to_string(),
                })
        })
        .collect();
    let mut stdout = String::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(line) => {
                stdout.push_str(&line);
                stdout.push('\n');
            }
            Err(e) => errors.push(e),
        }
    }
    stdout.push_str(&serde_json::to_string(&json!({ "errors": errors })).expect("serializable"));
    stdout.push('\n');
    Outcome {
        code: if errors.is_empty() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
