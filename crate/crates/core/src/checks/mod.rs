//! Self-verification suites. Each check normal-forms `lhs − rhs` (or tests a
//! structural property) and records the outcome; nothing here panics on
//! failure so the CLI and the test-suite can share the same code.

mod identities;
mod odd_order;
mod relations;

use serde::Serialize;

pub use identities::{identity_suite, opposite_exponent_suite};
pub use odd_order::odd_order_suite;
pub use relations::{associativity_probe, relation_suite};

use crate::error::Result;
use crate::pbw::{Element, Engine};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new() }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(CheckOutcome { name: name.into(), passed, detail });
    }

    /// Records whether `lhs == rhs`, printing the difference on failure.
    pub fn equal(&mut self, eng: &Engine, name: impl Into<String>, lhs: &Element, rhs: &Element) {
        let diff = lhs.sub(rhs);
        let detail = (!diff.is_zero()).then(|| format!("lhs - rhs = {}", diff.display(eng.sig())));
        self.record(name, diff.is_zero(), detail);
    }

    /// Records the result of a fallible check.
    pub fn attempt(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
        let name = name.into();
        match f() {
            Ok(None) => self.record(name, true, None),
            Ok(Some(why)) => self.record(name, false, Some(why)),
            Err(e) => self.record(name, false, Some(format!("error: {e}"))),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}
