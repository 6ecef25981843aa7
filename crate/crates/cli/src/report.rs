//! The report printed by every command, and the exit-code mapping.

use serde_json::{json, Map, Value};
use thiserror::Error;

use tforge_core::transform::TransformError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_EXHAUSTED: u8 = 4;

pub const SCHEMA: &str = "tforge.report/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{reason}")]
    Unsupported { code: String, reason: String },
    #[error("{0}")]
    Exhausted(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Unsupported { .. } => EXIT_UNSUPPORTED,
            CliError::Exhausted(_) => EXIT_EXHAUSTED,
            CliError::Internal(_) => EXIT_FAILED,
        }
    }

    fn code(&self) -> String {
        match self {
            CliError::Input(_) => "INPUT".into(),
            CliError::Unsupported { code, .. } => code.clone(),
            CliError::Exhausted(_) => "SEARCH_EXHAUSTED".into(),
            CliError::Internal(_) => "INTERNAL".into(),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        use TransformError::*;
        match e {
            NotMonic | NotSeparable | DegreeMismatch { .. } | Reducible | ZeroTail | Poly(_) => {
                CliError::Input(e.to_string())
            }
            Unsupported { code, reason } => CliError::Unsupported { code: code.into(), reason },
            IrreducibilityUnknown => CliError::Unsupported {
                code: "IRREDUCIBILITY_UNDECIDED".into(),
                reason: "irreducibility over Q could not be decided".into(),
            },
            SearchExhausted { .. } => CliError::Exhausted(e.to_string()),
            NotStabilizerInvariant { .. } | ReductionLeftover | Cov(_) | Sym(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<tforge_core::polyring::PolyError> for CliError {
    fn from(e: tforge_core::polyring::PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// A text line with a verdict, e.g. one identity of a suite.
pub struct Line {
    pub passed: bool,
    pub text: String,
}

pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub passed: bool,
    pub exit_code: u8,
    pub wall_time_seconds: Option<f64>,
    /// Verdict lines for the text rendering; key-value results otherwise.
    pub lines: Vec<Line>,
    error: Option<(String, String)>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Value, passed: bool) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            results,
            passed,
            exit_code: if passed { EXIT_OK } else { EXIT_FAILED },
            wall_time_seconds: None,
            lines: Vec::new(),
            error: None,
        }
    }

    pub fn with_lines(mut self, lines: Vec<Line>) -> Self {
        self.lines = lines;
        self
    }

    pub fn failure(command: &str, e: &CliError) -> Self {
        let mut r = RunReport::new(command, Value::Null, Value::Null, false);
        r.exit_code = e.exit_code();
        r.error = Some((e.code(), e.to_string()));
        r
    }

    pub fn error_message(&self) -> Option<&str> {
        self.error.as_ref().map(|(_, m)| m.as_str())
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("results".into(), self.results.clone());
        m.insert("passed".into(), json!(self.passed));
        m.insert("exit_code".into(), json!(self.exit_code));
        if let Some((code, message)) = &self.error {
            m.insert("error".into(), json!({ "code": code, "message": message }));
        }
        if let Some(t) = self.wall_time_seconds {
            m.insert("wall_time_seconds".into(), json!(t));
        }
        Value::Object(m)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some((code, message)) = &self.error {
            out.push_str(&format!("ERROR {code}: {message}\n"));
        } else if self.lines.is_empty() {
            if let Value::Object(m) = &self.results {
                for (k, v) in m {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k}: {v}\n"));
                }
            }
        } else {
            for l in &self.lines {
                out.push_str(&format!("{} {}\n", if l.passed { "PASS" } else { "FAIL" }, l.text));
            }
        }
        if self.error.is_none() {
            out.push_str(&format!("{}: {}\n", self.command, if self.passed { "PASS" } else { "FAIL" }));
        }
        if let Some(t) = self.wall_time_seconds {
            out.push_str(&format!("wall time: {t:.3}s\n"));
        }
        out
    }
}
