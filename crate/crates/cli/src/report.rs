use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use bdtorus::{Error, ErrorClass, FinAbGroup, Sublattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Outcome of one command: what was asked, what came out, how it ended.
pub struct Report {
    pub command: Value,
    pub input_digest: String,
    pub results: Value,
    pub diagnostics: Value,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The main path and the oracle disagree.
    Mismatch,
    Failed(ErrorClass),
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed(ErrorClass::Input) => 2,
            Status::Failed(ErrorClass::NotStabilized) => 3,
            Status::Failed(ErrorClass::Internal) | Status::Mismatch => 4,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Failed(ErrorClass::Input) => "invalid_input",
            Status::Failed(ErrorClass::NotStabilized) => "not_stabilized",
            Status::Failed(ErrorClass::Internal) => "internal_error",
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: Value, input: &[u8]) -> Self {
        Report {
            command,
            input_digest: digest(input),
            results: Value::Object(Map::new()),
            diagnostics: Value::Object(Map::new()),
            status: Status::Ok,
        }
    }

    pub fn fail(&mut self, err: &Error) {
        self.status = Status::Failed(err.class());
        let kind = match err.class() {
            ErrorClass::Input => "input",
            ErrorClass::NotStabilized => "not_stabilized",
            ErrorClass::Internal => "internal",
        };
        self.diagnostics["error"] = json!({ "class": kind, "message": err.to_string() });
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "diagnostics": self.diagnostics,
            "status": self.status.label(),
        })
    }

    pub fn render(&self, format: Format) -> String {
        let v = self.to_value();
        match format {
            Format::Json => serde_json::to_string_pretty(&v).expect("values serialize") + "\n",
            Format::Text => {
                let mut out = String::new();
                flatten("", &v, &mut out);
                out
            }
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        _ => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
}

pub fn group(g: &FinAbGroup) -> Value {
    serde_json::to_value(g).expect("groups serialize")
}

/// Basis vectors as rows; falls back to decimal strings for huge entries.
pub fn basis(l: &Sublattice) -> Value {
    match l.basis_rows_i64() {
        Some(rows) => json!(rows),
        None => {
            let rows: Vec<Vec<String>> =
                l.basis_vectors().iter().map(|c| c.iter().map(ToString::to_string).collect()).collect();
            json!(rows)
        }
    }
}
