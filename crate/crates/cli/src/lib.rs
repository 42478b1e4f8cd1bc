//! Session files and verification suites for the support calculator.

pub mod report;
pub mod session;
pub mod syntax;

pub use report::{exit_code, render, Format, Report, RunError, Status};
pub use session::{run_document, RunOptions};
pub use syntax::{parse_session, Document};

/// Reports of a run, including those produced before a failing command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub reports: Vec<Report>,
    pub error: Option<RunError>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.reports, self.error.as_ref())
    }
}

pub fn run_source(text: &str, opts: &RunOptions) -> Outcome {
    let doc = match parse_session(text) {
        Ok(d) => d,
        Err(e) => return Outcome { reports: Vec::new(), error: Some(e.into()) },
    };
    let mut reports = Vec::new();
    let error = run_document(&doc, opts, &mut reports).err();
    Outcome { reports, error }
}

pub const SUITES: [&str; 4] = ["support-identities", "adic-conditions", "detection", "dvr-tables"];

/// A named suite over `QQ[x,y]`, the same as a one-line `verify` session.
pub fn run_suite(suite: &str, seed: Option<u64>, count: Option<usize>, opts: &RunOptions) -> Outcome {
    if !SUITES.contains(&suite) {
        return Outcome { reports: Vec::new(), error: Some(RunError::Usage(format!("unknown suite '{suite}'"))) };
    }
    let mut cmd = format!("verify {suite}");
    if let Some(s) = seed {
        cmd.push_str(&format!(" seed {s}"));
    }
    if let Some(c) = count {
        cmd.push_str(&format!(" count {c}"));
    }
    run_source(&format!("ring QQ[x,y] grevlex;\n{cmd};\n"), opts)
}
