use std::fmt;

use crate::exactla::Rational;

/// One identity that failed on one tuple of basis inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub inputs: String,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

/// Outcome of an identity check over all basis tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Number of (identity, input tuple) instances evaluated.
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance; a failure is kept when the sides differ.
    pub fn compare(&mut self, identity: &str, inputs: impl FnOnce() -> String, lhs: Vec<Rational>, rhs: Vec<Rational>) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure { identity: identity.to_string(), inputs: inputs(), lhs, rhs });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Prefixes every failure label, e.g. with the name of a sub-check.
    pub fn labelled(mut self, prefix: &str) -> Self {
        for f in &mut self.failures {
            f.identity = format!("{prefix}: {}", f.identity);
        }
        self
    }
}

pub(crate) fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: lhs = {}, rhs = {}", self.identity, self.inputs, fmt_vec(&self.lhs), fmt_vec(&self.rhs))
    }
}
