//! Validation reports: every checker in this crate reports failures as a
//! list of violations with explicit witnesses rather than bailing out on the
//! first problem.

use std::fmt;

/// One violated rule together with a witness naming the offending data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

impl Violation {
    pub fn new(rule: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            rule: rule.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.witness)
    }
}

/// Outcome of a validator run over one named subject.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, rule: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation::new(rule, witness));
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// First violation, for terse error paths.
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: ok", self.subject);
        }
        writeln!(f, "{}: {} violation(s)", self.subject, self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
