use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// Number of instances compared.
    pub checked: usize,
    /// Number of instances that failed.
    pub failed: usize,
    /// Description of the first failing instance.
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, failed: 0, first_failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one comparison; `describe` runs only on the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure.map(|f| format!("{}: {f}", other.name));
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.name, self.checked - self.failed, self.checked)?;
        if let Some(fail) = &self.first_failure {
            write!(f, " (first failure: {fail})")?;
        }
        Ok(())
    }
}
