//! Pass/fail reports shared by every checker and verifier.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{basis_label, linear_index, LinearMap};

/// One named condition and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An ordered list of conditions plus named counts gathered on the way.
///
/// Axiom checkers only fill `items`; verifications also record set sizes
/// in `counts` so reports can be diffed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub items: Vec<CheckItem>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
}

/// Reports produced by the structural verifications.
pub type VerificationReport = CheckReport;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), ..Default::default() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.items.push(CheckItem { name: name.into(), passed, witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, false, Some(witness.into()));
    }

    /// Records `passed`, attaching the lazily built witness on failure.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        let w = if passed { None } else { Some(witness()) };
        self.push(name, passed, w);
    }

    /// Compares two maps exactly; the witness is the first basis tensor of
    /// the domain on which they differ.
    pub fn maps_equal(&mut self, name: impl Into<String>, lhs: Result<LinearMap>, rhs: Result<LinearMap>) {
        let name = name.into();
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                if a.cod() != b.cod() || a.dom() != b.dom() {
                    self.fail(name, "sides have different shapes");
                } else if let Some(at) = a.first_difference(&b) {
                    let idx = linear_index(a.dom(), &at);
                    self.fail(name, format!("differs on {}", basis_label(a.dom(), idx)));
                } else {
                    self.pass(name);
                }
            }
            (Err(e), _) | (_, Err(e)) => self.fail(name, format!("could not build map: {e}")),
        }
    }

    pub fn count(&mut self, name: impl Into<String>, value: u64) {
        self.counts.insert(name.into(), value);
    }

    /// Appends another report's items, prefixing their names.
    pub fn absorb(&mut self, other: CheckReport) {
        let prefix = other.name;
        for item in other.items {
            self.items.push(CheckItem { name: format!("{prefix}: {}", item.name), ..item });
        }
        for (k, v) in other.counts {
            self.counts.insert(format!("{prefix}: {k}"), v);
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.passed).collect()
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    /// `Ok(self)` if everything passed, otherwise `PrerequisiteFailed`.
    pub fn require(self) -> Result<CheckReport> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::prerequisite(self))
        }
    }

    /// Short multi-line summary, one line per item.
    pub fn summary(&self) -> String {
        let mut s = format!("{}: {}\n", self.name, if self.passed() { "pass" } else { "FAIL" });
        for i in &self.items {
            let mark = if i.passed { "ok  " } else { "FAIL" };
            match &i.witness {
                Some(w) => s.push_str(&format!("  {mark} {} ({w})\n", i.name)),
                None => s.push_str(&format!("  {mark} {}\n", i.name)),
            }
        }
        for (k, v) in &self.counts {
            s.push_str(&format!("  #    {k} = {v}\n"));
        }
        s
    }
}
