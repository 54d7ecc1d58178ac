//! Versioned JSON report.

use std::collections::BTreeMap;

use agq_core::{ApComplex, ApReal, CheckReport, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub check_name: String,
    pub expected: String,
    pub actual: String,
    pub location: String,
}

/// One verifier run inside a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub cell: String,
    pub check: String,
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub bound: String,
    pub compared: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub details: Vec<Detail>,
    pub checks: Vec<CheckSummary>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision_bits: Option<usize>,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, parameters: BTreeMap<String, String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            parameters,
            status: Status::Pass,
            details: Vec::new(),
            checks: Vec::new(),
            values: BTreeMap::new(),
            error: None,
            seed: None,
            precision_bits: None,
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, cell: &str, report: CheckReport) {
        let status = if report.passed() { Status::Pass } else { Status::Fail };
        for f in &report.failures {
            self.details.push(Detail {
                check_name: if f.check.is_empty() { report.check.to_string() } else { format!("{}/{}", report.check, f.check) },
                expected: f.expected.clone(),
                actual: f.actual.clone(),
                location: format!("{cell}: {}", f.location),
            });
        }
        self.checks.push(CheckSummary {
            cell: cell.to_string(),
            check: report.check.to_string(),
            identity: crate::checks::identity(report.check).to_string(),
            parameters: report.parameters.into_iter().collect(),
            bound: report.bound,
            compared: report.checked,
            status,
            values: report.values.into_iter().map(|(k, v)| (k, Value::String(v))).collect(),
        });
        self.refresh_status();
    }

    pub fn fail_with(&mut self, message: String) {
        self.error = Some(message);
        self.status = Status::Error;
    }

    fn refresh_status(&mut self) {
        if self.status != Status::Error {
            self.status = if self.details.is_empty() { Status::Pass } else { Status::Fail };
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, status_word(self.status));
        for c in &self.checks {
            out.push_str(&format!("  {} {:<28} {} ({} compared)\n", status_word(c.status), c.check, c.cell, c.compared));
        }
        for (k, v) in &self.values {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Object(o) => match (o.get("re_dec"), o.get("im_dec")) {
                    (Some(Value::String(re)), Some(Value::String(im))) => match im.strip_prefix('-') {
                        Some(abs) => format!("{re} - {abs} i"),
                        None => format!("{re} + {im} i"),
                    },
                    _ => v.to_string(),
                },
                _ => v.to_string(),
            };
            out.push_str(&format!("  {k} = {shown}\n"));
        }
        for d in &self.details {
            out.push_str(&format!("  mismatch {} at {}: expected {}, got {}\n", d.check_name, d.location, d.expected, d.actual));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn real(x: &ApReal) -> Value {
    serde_json::json!({ "hex": x.to_hex(), "dec": x.to_dec_digits(40) })
}

pub fn complex(z: &ApComplex) -> Value {
    serde_json::json!({
        "re_hex": z.re.to_hex(),
        "im_hex": z.im.to_hex(),
        "re_dec": z.re.to_dec_digits(40),
        "im_dec": z.im.to_dec_digits(40),
    })
}
