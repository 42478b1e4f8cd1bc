//! Command reports and their text and structured renderings.

use std::fmt;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

/// One command's result as ordered key/value pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub entries: Vec<(String, String)>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Syntax(String),
    /// Well-formed input that does not make sense: unknown names, bad shapes, `d∘d ≠ 0`.
    Semantic(String),
    Usage(String),
    Computation(suppcalc::Error),
}

impl From<suppcalc::Error> for RunError {
    fn from(e: suppcalc::Error) -> Self {
        RunError::Computation(e)
    }
}

impl From<crate::syntax::SyntaxError> for RunError {
    fn from(e: crate::syntax::SyntaxError) -> Self {
        RunError::Syntax(e.to_string())
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Syntax(m) => write!(f, "{m}"),
            RunError::Semantic(m) => write!(f, "semantic error: {m}"),
            RunError::Usage(m) => write!(f, "usage error: {m}"),
            RunError::Computation(e) => write!(f, "computation error: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Syntax(_) | RunError::Semantic(_) | RunError::Usage(_) => EXIT_USAGE,
            RunError::Computation(suppcalc::Error::ConditionDisagreement(_)) => EXIT_DISAGREEMENT,
            RunError::Computation(_) => EXIT_COMPUTATION,
        }
    }
}

/// Exit code for a finished run: the error's if any, else 3 when a check failed.
pub fn exit_code(reports: &[Report], error: Option<&RunError>) -> i32 {
    match error {
        Some(e) => e.exit_code(),
        None if reports.iter().any(|r| r.status == Status::VerificationFailed) => EXIT_VERIFICATION,
        None => EXIT_OK,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "structured" | "json" => Ok(Format::Structured),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("> {}\n", r.command));
        for (k, v) in &r.entries {
            out.push_str(&format!("{k} = {v}\n"));
        }
    }
    out
}

/// A JSON array with one flat string map per command, keys in report order.
pub fn render_structured(reports: &[Report]) -> String {
    let arr: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("command".into(), Value::String(r.command.clone()));
            for (k, v) in &r.entries {
                m.insert(k.clone(), Value::String(v.clone()));
            }
            Value::Object(m)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(arr)).expect("string maps serialize");
    s.push('\n');
    s
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => render_text(reports),
        Format::Structured => render_structured(reports),
    }
}
