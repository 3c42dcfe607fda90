//! Pass/fail reports produced by the verification routines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample or a short summary.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Appends every check of `other`, prefixing names with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            let name = if prefix.is_empty() { c.name } else { alloc::format!("{prefix}/{}", c.name) };
            self.checks.push(Check { name, ..c });
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}
