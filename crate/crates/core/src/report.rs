//! Structured verdicts shared by every check suite.

use std::collections::BTreeMap;

use serde::Serialize;

/// Parameters of the randomized layers of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            samples: 50,
            max_degree: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub residual: String,
}

/// Outcome of a check. `passed` is true exactly when `witnesses` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    pub elapsed_ms: u64,
    /// Numeric side results such as ranks; not part of the JSON output.
    #[serde(skip)]
    pub metrics: BTreeMap<String, i64>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            passed: true,
            witnesses: Vec::new(),
            seed: 0,
            elapsed_ms: 0,
            metrics: BTreeMap::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn push(&mut self, identity: impl Into<String>, residual: impl Into<String>) {
        self.witnesses.push(Witness {
            identity: identity.into(),
            residual: residual.into(),
        });
        self.passed = false;
    }

    /// Appends the witnesses of `other`, prefixing identities with its name.
    pub fn absorb(&mut self, other: &CheckReport) {
        for w in &other.witnesses {
            self.push(format!("{}: {}", other.check, w.identity), w.residual.clone());
        }
    }

    pub fn metric(&self, key: &str) -> Option<i64> {
        self.metrics.get(key).copied()
    }

    pub fn set_metric(&mut self, key: &str, value: i64) {
        self.metrics.insert(key.to_owned(), value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_witnesses() {
        let mut r = CheckReport::new("demo");
        assert!(r.passed);
        r.push("J(1,2,3)[l=3]", "e3");
        assert!(!r.passed);
        let mut outer = CheckReport::new("outer");
        outer.absorb(&r);
        assert_eq!(outer.witnesses[0].identity, "demo: J(1,2,3)[l=3]");
    }
}
