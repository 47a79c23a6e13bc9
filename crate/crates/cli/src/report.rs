//! Structured reports.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: &str = "comod-report/1";

/// A check either passes, fails with a witness, or makes no claim beyond
/// the finite family it was run against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotCertified,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotCertified => "n/c",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict, witness: Option<String>) -> Self {
        Self { name: name.into(), verdict, witness }
    }

    /// Pass, or fail with the witness produced by `w`.
    pub fn expect(name: impl Into<String>, ok: bool, w: impl FnOnce() -> String) -> Self {
        Self::new(name, Verdict::from_bool(ok), (!ok).then(w))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub build_ms: f64,
    pub run_ms: f64,
}

/// Everything except `timings` is a function of the command line and the file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub arguments: Vec<String>,
    pub ring: Option<String>,
    /// SHA-256 of the canonical rendering, or of the raw text if it did not parse.
    pub input_digest: String,
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
    pub data: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub timings: Timings,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable form for the terminal.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let args = self.arguments.join(" ");
        let ring = self.ring.as_deref().unwrap_or("?");
        let _ = writeln!(out, "{} {args} [ring {ring}, input {}]", self.command, &self.input_digest[..12]);
        for c in &self.checks {
            match &c.witness {
                Some(w) => {
                    let _ = writeln!(out, "  {:4}  {}: {w}", c.verdict.label(), c.name);
                }
                None => {
                    let _ = writeln!(out, "  {:4}  {}", c.verdict.label(), c.name);
                }
            }
        }
        if let Some(s) = &self.scope {
            let _ = writeln!(out, "  scope: {s}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error ({}): {}", e.kind, e.message);
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        };
        let _ = writeln!(out, "status: {status}");
        out
    }
}
