use std::fmt;

use serde::Serialize;

/// One violated axiom instance, located by basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// Outcome of an axiom check. An empty report means the input is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, axiom: &str, indices: Vec<usize>, detail: impl Into<String>) {
        self.failures.push(Failure {
            axiom: axiom.to_string(),
            indices,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid");
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} at {:?}: {}", fail.axiom, fail.indices, fail.detail)?;
        }
        Ok(())
    }
}
