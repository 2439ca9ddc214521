//! Command-line front end. [`run`] takes the argument list and output
//! streams so it can be driven from tests; the `cosmetry` binary is a thin
//! wrapper around it.
//!
//! Exit codes: 0 success, 1 input error, 2 internal inconsistency.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::alexander::{a2_of, a2_paths, alexander_of, lspace_form};
use crate::arith::{dedekind, Int};
use crate::error::{Error, Result};
use crate::invariants::{casson_walker, h1_order};
use crate::obstruction::{check_iterated, check_pair_with, check_theorem1_with, CheckOptions};
use crate::search::{
    enumerate_candidates, family_b_pair, search_summary, to_json_lines, verify_family_b,
};
use crate::surgery::{describe_cable_surgery, is_reduced, Slope};
use crate::topo::{parse_knot, Containment, KnotExpr};

#[derive(Debug, Parser)]
#[command(
    name = "cosmetry",
    version,
    about = "Exact invariants and obstructions for chirally cosmetic surgeries on cable knots"
)]
struct Cli {
    /// Emit JSON (JSON-lines for `search`) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct KnotArg {
    /// Knot expression, e.g. "cable(3,2; torus(2,3))".
    #[arg(long)]
    knot: String,
}

#[derive(Debug, Args)]
struct Orientation {
    /// Also accept mirrored torus-knot exterior pieces.
    #[arg(long)]
    unoriented: bool,
}

impl Orientation {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            containment: if self.unoriented {
                Containment::Unoriented
            } else {
                Containment::Oriented
            },
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dedekind sum s(a,b).
    #[command(allow_negative_numbers = true)]
    Dedekind { a: Int, b: Int },
    /// Symmetrized Alexander polynomial.
    Alexander(KnotArg),
    /// Second Conway coefficient a₂.
    A2(KnotArg),
    /// Whether the Alexander polynomial has the L-space knot form.
    Lspace(KnotArg),
    /// Casson–Walker invariant of S³_K(m/n).
    Cw {
        #[arg(long, conflicts_with = "a2", required_unless_present = "a2")]
        knot: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        a2: Option<Int>,
        /// Slope "m/n".
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Describe S³_{K_{p,q}}(m/n).
    CableSurgery {
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Can m/n and m/n′ on K_{p,q} be chirally cosmetic?
    CheckPair {
        #[arg(long)]
        knot: String,
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        n: i64,
        #[arg(long)]
        nprime: i64,
        #[command(flatten)]
        orientation: Orientation,
    },
    /// Sufficient conditions ruling out every pair on K_{p,q}.
    CheckTheorem {
        #[arg(long)]
        knot: String,
        #[arg(short, allow_negative_numbers = true)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[command(flatten)]
        orientation: Orientation,
    },
    /// Iterated cable of the unknot or a hyperbolic knot.
    CheckIterated {
        #[arg(long, default_value = "unknot")]
        base: String,
        /// Cabling parameters "p,q", innermost first.
        #[arg(required = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// The family slope pair for (r, k).
    FamilyB {
        #[arg(short, allow_negative_numbers = true)]
        r: i64,
        #[arg(short)]
        k: i64,
    },
    /// Enumerate slope pairs passing the necessary conditions.
    Search {
        #[arg(long)]
        knot: String,
        #[arg(long)]
        mmax: i64,
        #[arg(long)]
        nmax: i64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check the family identity for k = 0..=kmax.
    VerifyFamilyB {
        #[arg(short)]
        r: i64,
        #[arg(long)]
        kmax: i64,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn line(&mut self, text: impl std::fmt::Display) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| Error::Inconsistent(format!("write failed: {e}")))
    }

    fn emit(&mut self, text: impl std::fmt::Display, value: serde_json::Value) -> Result<()> {
        if self.json {
            self.line(value)
        } else {
            self.line(text)
        }
    }

    fn notice(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.err, "note: {text}");
    }
}

fn knot(src: &str) -> Result<KnotExpr> {
    parse_knot(src)
}

/// Parses "m/n", reducing with a notice when needed.
fn slope(io: &mut Io, src: &str) -> Result<Slope> {
    let s: Slope = src.parse()?;
    let raw = src.split_once('/');
    if let Some((m, n)) = raw {
        let (m, n): (Int, Int) = (
            m.trim().parse().unwrap_or_default(),
            n.trim().parse().unwrap_or_default(),
        );
        if !is_reduced(&m, &n) {
            io.notice(format!("slope {src} reduced to {s}"));
        }
    }
    Ok(s)
}

fn iterated_param(src: &str) -> Result<(i64, i64)> {
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("expected a cabling parameter `p,q`, got `{src}`"),
    };
    let (p, q) = src.split_once(',').ok_or_else(bad)?;
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

fn dispatch(io: &mut Io, command: Command) -> Result<i32> {
    match command {
        Command::Dedekind { a, b } => {
            let v = dedekind(&a, &b)?;
            io.emit(
                &v,
                json!({ "a": a.to_string(), "b": b.to_string(), "value": v }),
            )?;
        }
        Command::Alexander(k) => {
            let k = knot(&k.knot)?;
            let poly = alexander_of(&k)?;
            io.emit(
                poly.to_pretty(),
                json!({ "knot": k.to_string(), "alexander": poly, "pretty": poly.to_pretty() }),
            )?;
        }
        Command::A2(k) => {
            let k = knot(&k.knot)?;
            let paths = a2_paths(&k)?;
            let a2 = a2_of(&k)?;
            io.emit(
                &a2,
                json!({
                    "knot": k.to_string(),
                    "a2": a2.to_string(),
                    "cabling": paths.cabling.to_string(),
                    "polynomial": paths.polynomial.as_ref().map(|v| v.to_string()),
                }),
            )?;
        }
        Command::Lspace(k) => {
            let k = knot(&k.knot)?;
            let form = lspace_form(&alexander_of(&k)?)?;
            let text = match &form.exponents {
                Some(e) => format!("L-space form: yes (exponents {e:?})"),
                None => "L-space form: no".to_string(),
            };
            io.emit(
                text,
                json!({ "knot": k.to_string(), "passes": form.passes(), "exponents": form.exponents }),
            )?;
        }
        Command::Cw {
            knot: k,
            a2,
            slope: s,
        } => {
            let a2 = match (k, a2) {
                (_, Some(a2)) => a2,
                (Some(k), None) => a2_of(&knot(&k)?)?,
                (None, None) => return Err(Error::pre("one of --knot or --a2")),
            };
            let s = slope(io, &s)?;
            let lambda = casson_walker(&a2, &s)?;
            io.emit(
                &lambda,
                json!({
                    "slope": s,
                    "a2": a2.to_string(),
                    "h1_order": h1_order(&s).to_string(),
                    "lambda": lambda,
                }),
            )?;
        }
        Command::CableSurgery { p, q, slope: s } => {
            let s = slope(io, &s)?;
            let d = describe_cable_surgery(&p.into(), &q.into(), &s)?;
            let value = serde_json::to_value(&d).map_err(|e| Error::Inconsistent(e.to_string()))?;
            io.emit(&d, value)?;
        }
        Command::CheckPair {
            knot: k,
            p,
            q,
            m,
            n,
            nprime,
            orientation,
        } => {
            let r = check_pair_with(&knot(&k)?, p, q, m, n, nprime, orientation.options())?;
            io.emit(&r, serde_json::to_value(&r).expect("reports serialize"))?;
        }
        Command::CheckTheorem {
            knot: k,
            p,
            q,
            orientation,
        } => {
            let r = check_theorem1_with(&knot(&k)?, p, q, orientation.options())?;
            io.emit(&r, serde_json::to_value(&r).expect("reports serialize"))?;
        }
        Command::CheckIterated { base, params } => {
            let params: Vec<(i64, i64)> = params
                .iter()
                .map(|s| iterated_param(s))
                .collect::<Result<_>>()?;
            let r = check_iterated(&params, &knot(&base)?)?;
            io.emit(&r, serde_json::to_value(&r).expect("reports serialize"))?;
        }
        Command::FamilyB { r, k } => {
            let (plus, minus) = family_b_pair(r, k)?;
            io.emit(
                format!("{plus} {minus}"),
                json!({ "r": r, "k": k, "plus": plus, "minus": minus }),
            )?;
        }
        Command::Search {
            knot: k,
            mmax,
            nmax,
            threads,
        } => {
            let k = knot(&k)?;
            let found = enumerate_candidates(&k, mmax, nmax, threads)?;
            let summary = search_summary(&k, mmax, nmax, &found)?;
            if io.json {
                let text = to_json_lines(&found, &summary);
                write!(io.out, "{text}")
                    .map_err(|e| Error::Inconsistent(format!("write failed: {e}")))?;
            } else {
                for c in &found {
                    let family = c
                        .family_b
                        .map(|f| format!("  family (b): r = {}, k = {}", f.r, f.k));
                    io.line(format!(
                        "{}/{} {}/{}{}",
                        c.m,
                        c.n,
                        c.m,
                        c.n_prime,
                        family.unwrap_or_default()
                    ))?;
                }
                io.line(format!(
                    "{} {} pair(s), {} in the known family",
                    summary.candidates, summary.label, summary.family_b
                ))?;
            }
        }
        Command::VerifyFamilyB { r, kmax } => {
            let report = verify_family_b(r, kmax)?;
            let (passed, total) = (report.passed(), report.checks.len());
            let status = if report.all_pass() { "OK" } else { "FAIL" };
            let value = serde_json::to_value(&report).expect("reports serialize");
            io.emit(format!("{status}: {passed}/{total} pairs pass"), value)?;
            if !report.all_pass() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    let mut io = Io {
        out,
        err,
        json: cli.json,
    };
    match dispatch(&mut io, cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            if e.is_input_error() {
                1
            } else {
                2
            }
        }
    }
}
