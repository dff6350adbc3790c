//! Validation reports shared by all structure checkers.
//!
//! Every checker that can fail produces a [`ValidationReport`]: a list of
//! violated laws, each with a concrete witness tuple. An empty report means
//! the structure is valid. Witnesses are raw carrier indices; name
//! restoration happens in the DSL layer.

use serde::Serialize;
use std::fmt;

/// One violated law together with the indices witnessing the violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short identifier of the law, e.g. `"associativity"` or `"S.2"`.
    pub law: String,
    /// Witness tuple, as carrier/element indices in scan order.
    pub witness: Vec<usize>,
    /// Human-readable elaboration of the failure.
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation {
            law: law.into(),
            witness,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// True iff some violation is tagged with the given law.
    pub fn violates(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} at {:?}: {}", v.law, v.witness, v.detail)?;
        }
        Ok(())
    }
}

/// Errors distinct from axiom violations: malformed tables, domain errors,
/// refused constructions and exceeded enumeration budgets.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Ragged tables, out-of-range indices, mismatched carriers.
    #[error("structural error: {0}")]
    Structural(String),
    /// Invalid argument values (e.g. a zero-length chain).
    #[error("domain error: {0}")]
    Domain(String),
    /// A construction was refused because its input fails required axioms.
    #[error("invalid input: {0}")]
    Invalid(ValidationReport),
    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: search space has {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
