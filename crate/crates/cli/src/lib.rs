//! Batch front-end: parse definition files, run one verification or
//! computation, and report the outcome.

pub mod commands;
pub mod format;
pub mod model;
pub mod report;

use std::fmt;
use std::time::Instant;

use comod::ring::{Integers, IntegersMod, PrimeField, Rationals, Ring, RingDescriptor};
use sha2::{Digest, Sha256};

use crate::format::DefinitionFile;
use crate::model::Model;
use crate::report::{ErrorInfo, Report, Status, Timings, Verdict, SCHEMA};

pub use commands::{Command, Outcome, RunOptions};

/// Anything that stops a command before it can return a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse { line: usize, col: usize, msg: String },
    Semantic { name: String, msg: String },
    Usage(String),
    Io(String),
    /// A library error caused by the input rather than by a failed check.
    Input(comod::error::Error),
}

impl CliError {
    pub fn kind(&self) -> String {
        match self {
            CliError::Parse { .. } => "ParseError".into(),
            CliError::Semantic { .. } => "SemanticError".into(),
            CliError::Usage(_) => "UsageError".into(),
            CliError::Io(_) => "IoError".into(),
            CliError::Input(e) => commands::error_kind(e).into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, col, msg } => write!(f, "{line}:{col}: {msg}"),
            CliError::Semantic { name, msg } => write!(f, "{name}: {msg}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Input(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn typed<R: Ring>(
    ring: &R,
    file: &DefinitionFile,
    cmd: Command,
    names: &[String],
    opts: &RunOptions,
    timings: &mut Timings,
) -> Result<Outcome, CliError> {
    let t = Instant::now();
    let model = Model::build(ring, file, opts.max_rank)?;
    timings.build_ms = ms(t);
    let t = Instant::now();
    let out = commands::run(cmd, &model, names, opts);
    timings.run_ms = ms(t);
    out
}

fn dispatch(file: &DefinitionFile, cmd: Command, names: &[String], opts: &RunOptions, timings: &mut Timings) -> Result<Outcome, CliError> {
    let bad = |e: comod::ring::RingError| CliError::Usage(e.to_string());
    match file.ring {
        RingDescriptor::Rationals => typed(&Rationals, file, cmd, names, opts, timings),
        RingDescriptor::Integers => typed(&Integers, file, cmd, names, opts, timings),
        RingDescriptor::PrimeField(p) => typed(&PrimeField::new(p).map_err(bad)?, file, cmd, names, opts, timings),
        RingDescriptor::IntegersMod(n) => typed(&IntegersMod::new(n).map_err(bad)?, file, cmd, names, opts, timings),
    }
}

/// Runs `cmd` on the definition text. Never panics on bad input; errors end
/// up in the report with status `error`.
pub fn execute(cmd: Command, text: &str, names: &[String], opts: &RunOptions) -> Report {
    let mut timings = Timings::default();
    let t = Instant::now();
    let parsed = format::parse(text);
    timings.parse_ms = ms(t);
    let (ring, digest) = match &parsed {
        Ok(f) => (Some(f.ring.to_string()), sha256_hex(format::render(f).as_bytes())),
        Err(_) => (None, sha256_hex(text.as_bytes())),
    };
    let result = parsed.and_then(|f| {
        opts.validate(cmd)?;
        dispatch(&f, cmd, names, opts, &mut timings)
    });
    let mut report = Report {
        schema: SCHEMA,
        command: cmd.name().to_string(),
        arguments: names.to_vec(),
        ring,
        input_digest: digest,
        status: Status::Error,
        checks: Vec::new(),
        scope: None,
        data: serde_json::Value::Null,
        error: None,
        timings,
    };
    match result {
        Ok(out) => {
            report.status =
                if out.checks.iter().any(|c| c.verdict == Verdict::Fail) { Status::Fail } else { Status::Pass };
            report.checks = out.checks;
            report.scope = out.scope;
            report.data = out.data;
        }
        Err(e) => report.error = Some(ErrorInfo { kind: e.kind(), message: e.to_string() }),
    }
    report
}
