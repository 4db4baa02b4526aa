//! Command language, report assembly and batch evaluation for the `hrhlab` binary.
//!
//! ```text
//! command := verb target flag*
//! expr    := "bp(" int ("," int)* ")" | "ts(" expr "," expr ")" | "tuple(" expr "," expr ")"
//! verb    := spectrum expr | hrh expr | bsato expr
//!          | det (generic|skew-odd|skew-even|symmetric) key=int*
//!          | cone n=int h=[[p,q,v],...] | cone file=PATH
//!          | toric rays=[[int,...],...]
//!          | secant p1=bool vanishing=bool
//!          | verify
//! flag    := --format=(text|json) | --suite=(all|spectrum|det|families)
//! ```

mod parse;
mod report;
mod run;
pub mod verify;

use std::fmt;

use rayon::prelude::*;

use crate::determinantal::{DetCase, DetSpec};
use crate::error::HrhError;
use crate::spectrum::{BpSpec, DEFAULT_MAX_MU};

pub use parse::{parse, ErrorCode, ParseError};
pub use report::{Check, Report};
pub use run::run;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Bp(BpSpec),
    /// `f(x) + g(y)` in disjoint variables.
    Ts(Box<Expr>, Box<Expr>),
    /// The pair `(f(x), g(y))` in disjoint variables.
    Tuple(Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Bp(spec) => write!(f, "{spec}"),
            Expr::Ts(a, b) => write!(f, "ts({a},{b})"),
            Expr::Tuple(a, b) => write!(f, "tuple({a},{b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiamondSource {
    Inline { n: usize, entries: Vec<(i64, i64, i64)> },
    File(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Spectrum,
    Det,
    Families,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Spectrum => "spectrum",
            Suite::Det => "det",
            Suite::Families => "families",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Spectrum(Expr),
    Hrh(Expr),
    Bsato(Expr),
    Det(DetSpec),
    Cone(DiamondSource),
    Toric(Vec<Vec<i64>>),
    Secant { is_p1: bool, vanishing: bool },
    Verify(Suite),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub target: Target,
    /// `None` when no `--format` flag was given.
    pub format: Option<Format>,
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self.target {
            Target::Spectrum(_) => "spectrum",
            Target::Hrh(_) => "hrh",
            Target::Bsato(_) => "bsato",
            Target::Det(_) => "det",
            Target::Cone(_) => "cone",
            Target::Toric(_) => "toric",
            Target::Secant { .. } => "secant",
            Target::Verify(_) => "verify",
        }
    }
}

fn write_int_list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

/// Canonical text form; `parse` inverts it.
impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verb())?;
        match &self.target {
            Target::Spectrum(e) | Target::Hrh(e) | Target::Bsato(e) => write!(f, " {e}")?,
            Target::Det(spec) => {
                let p = spec.p();
                match spec.case() {
                    DetCase::Generic { m, n } => write!(f, " generic m={m} n={n} p={p}")?,
                    DetCase::SkewOdd { m } => write!(f, " skew-odd m={m} p={p}")?,
                    DetCase::SkewEven { m } => write!(f, " skew-even m={m} p={p}")?,
                    DetCase::Symmetric { n } => write!(f, " symmetric n={n} p={p}")?,
                }
            }
            Target::Cone(DiamondSource::Inline { n, entries }) => {
                write!(f, " n={n} h=[")?;
                for (i, &(p, q, v)) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write_int_list(f, &[p, q, v])?;
                }
                write!(f, "]")?;
            }
            Target::Cone(DiamondSource::File(path)) => write!(f, " file={path}")?,
            Target::Toric(rays) => {
                write!(f, " rays=[")?;
                for (i, r) in rays.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write_int_list(f, r)?;
                }
                write!(f, "]")?;
            }
            Target::Secant { is_p1, vanishing } => write!(f, " p1={is_p1} vanishing={vanishing}")?,
            Target::Verify(suite) => write!(f, " --suite={}", suite.name())?,
        }
        match self.format {
            Some(Format::Json) => write!(f, " --format=json"),
            Some(Format::Text) => write!(f, " --format=text"),
            None => Ok(()),
        }
    }
}

/// Evaluation settings shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest Milnor number for which a spectrum is enumerated.
    pub max_mu: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_mu: DEFAULT_MAX_MU }
    }
}

impl Config {
    /// Reads `HRHLAB_MAX_MU`, falling back to the default when unset.
    pub fn from_env() -> Result<Self, HrhError> {
        match std::env::var("HRHLAB_MAX_MU") {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_mu| Config { max_mu })
                .map_err(|_| HrhError::domain(format!("HRHLAB_MAX_MU must be a non-negative integer, got {v:?}"))),
            Err(_) => Ok(Config::default()),
        }
    }
}

/// Exit status for the binary: 0 ok, 2 bad input or out-of-domain, 3 internal inconsistency.
pub fn exit_code(err: &HrhError) -> i32 {
    match err {
        HrhError::Domain(_) => 2,
        HrhError::Consistency(_) => 3,
    }
}

/// Outcome of evaluating one line of input.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
    /// The command did not produce a report.
    pub is_error: bool,
}

fn error_output(input: &str, code: &str, message: &str, format: Format) -> String {
    match format {
        Format::Text => format!("error[{code}]: {message}"),
        Format::Json => serde_json::json!({
            "input": input,
            "error": { "code": code, "message": message },
        })
        .to_string(),
    }
}

/// `--format` flag of a line that failed to parse, found by a plain token scan.
fn requested_format(line: &str) -> Option<Format> {
    line.split_whitespace().rev().find_map(|tok| match tok {
        "--format=json" => Some(Format::Json),
        "--format=text" => Some(Format::Text),
        _ => None,
    })
}

/// Parses and runs one command line. `default_format` applies when the line
/// has no `--format` flag of its own.
pub fn evaluate(line: &str, default_format: Format, cfg: &Config) -> Outcome {
    let cmd = match parse(line) {
        Ok(cmd) => cmd,
        Err(e) => {
            return Outcome {
                output: error_output(
                    line,
                    e.code.as_str(),
                    &e.to_string(),
                    requested_format(line).unwrap_or(default_format),
                ),
                exit_code: 2,
                is_error: true,
            }
        }
    };
    let format = cmd.format.unwrap_or(default_format);
    match run(&cmd, cfg) {
        Ok(report) => {
            let exit_code = if report.passed() { 0 } else { 3 };
            Outcome { output: report.render(format), exit_code, is_error: false }
        }
        Err(e) => {
            let code = match e {
                HrhError::Domain(_) => "E_DOMAIN",
                HrhError::Consistency(_) => "E_CONSISTENCY",
            };
            Outcome {
                output: error_output(line, code, &e.to_string(), format),
                exit_code: exit_code(&e),
                is_error: true,
            }
        }
    }
}

/// Lines of a batch file that carry a command (blank lines and `#` comments skipped).
pub fn batch_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Evaluates every line, in parallel when asked, returning outcomes in input order.
pub fn run_batch(lines: &[&str], default_format: Format, cfg: &Config, parallel: bool) -> Vec<Outcome> {
    if parallel {
        lines.par_iter().map(|l| evaluate(l, default_format, cfg)).collect()
    } else {
        lines.iter().map(|l| evaluate(l, default_format, cfg)).collect()
    }
}

/// Worst exit code of a batch.
pub fn batch_exit_code(outcomes: &[Outcome]) -> i32 {
    outcomes.iter().map(|o| o.exit_code).max().unwrap_or(0)
}
