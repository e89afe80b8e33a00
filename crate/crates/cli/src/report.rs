//! Run reports and the exit-code contract.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use pocs_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Pass => ExitCode::SUCCESS,
            Outcome::Fail => ExitCode::from(1),
            Outcome::Error => ExitCode::from(2),
        }
    }
}

/// What a command produced, before rendering.
pub struct Run {
    pub outcome: Outcome,
    pub payload: Value,
    pub summary: String,
}

impl Run {
    pub fn new(pass: bool, payload: impl Serialize, summary: impl Into<String>) -> Self {
        Self {
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
            payload: serde_json::to_value(payload).expect("serializable payload"),
            summary: summary.into(),
        }
    }

    /// Findings become failures; anything else is an input error.
    pub fn from_error(e: &Error) -> Self {
        let outcome = if e.is_finding() { Outcome::Fail } else { Outcome::Error };
        let key = if e.is_finding() { "finding" } else { "error" };
        Self { outcome, payload: json!({ key: e.to_string() }), summary: format!("{key}: {e}") }
    }
}

#[derive(Serialize)]
pub struct RunReport<'a> {
    pub command: &'a str,
    pub parameters: Value,
    pub outcome: Outcome,
    pub payload: &'a Value,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

pub fn emit(text: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
