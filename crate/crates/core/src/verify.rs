//! Pass/fail reports shared by all verification routines.

use std::fmt;

/// One checked instance of an identity, with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub instance: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn new(
        instance: impl Into<String>,
        holds: bool,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        Check {
            instance: instance.into(),
            holds,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// Compare two exactly-comparable values.
    pub fn equal<T: PartialEq + fmt::Display>(
        instance: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        Check::new(instance, lhs == rhs, lhs, rhs)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.holds { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag}  {}  lhs={}  rhs={}",
            self.instance, self.lhs, self.rhs
        )
    }
}

/// Ordered list of checks for a named identity family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} checks, {} failed",
            self.name,
            self.checks.len(),
            failed
        )
    }
}
