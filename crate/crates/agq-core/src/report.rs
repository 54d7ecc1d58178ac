//! Structured outcomes of a verifier.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Result of one verifier run.
///
/// `passed` is true iff `failures` is empty. `bound` records the truncation
/// or tolerance used, `values` carries extra named quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: &'static str,
    pub parameters: Vec<(String, String)>,
    pub bound: String,
    pub checked: usize,
    pub failures: Vec<Mismatch>,
    pub values: Vec<(String, String)>,
}

impl CheckReport {
    pub fn new(check: &'static str) -> Self {
        CheckReport {
            check,
            parameters: Vec::new(),
            bound: String::new(),
            checked: 0,
            failures: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn bound(mut self, note: impl Into<String>) -> Self {
        self.bound = note.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, check: &str, location: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.checked += 1;
        if !ok {
            self.failures.push(Mismatch {
                check: check.into(),
                location: location.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn value(&mut self, key: &str, value: impl ToString) {
        self.values.push((key.into(), value.to_string()));
    }

    /// Folds another report in, prefixing its failures with its check name.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        for mut f in other.failures {
            if f.check.is_empty() {
                f.check = other.check.into();
            }
            self.failures.push(f);
        }
        self.values.extend(other.values);
    }

    pub fn first_failure(&self) -> Option<&Mismatch> {
        self.failures.first()
    }
}

