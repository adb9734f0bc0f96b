//! Pass/fail records shared by every verification suite.

use serde::{Deserialize, Serialize};

use crate::linalg::ExactMatrix;

/// Outcome of checking one exact identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub passed: bool,
    pub first_discrepancy: Option<[usize; 2]>,
}

impl IdentityCheck {
    /// Compares `lhs == rhs` entrywise.
    pub fn compare(identity: impl Into<String>, lhs: &ExactMatrix, rhs: &ExactMatrix) -> Self {
        let first = lhs.first_discrepancy(rhs);
        IdentityCheck {
            identity: identity.into(),
            passed: first.is_none(),
            first_discrepancy: first.map(|(r, c)| [r, c]),
        }
    }

    /// A scalar or structural fact with no matrix position attached.
    pub fn holds(identity: impl Into<String>, passed: bool) -> Self {
        IdentityCheck {
            identity: identity.into(),
            passed,
            first_discrepancy: None,
        }
    }

    pub fn at(identity: impl Into<String>, failure: Option<(usize, usize)>) -> Self {
        IdentityCheck {
            identity: identity.into(),
            passed: failure.is_none(),
            first_discrepancy: failure.map(|(r, c)| [r, c]),
        }
    }
}

pub fn all_passed(checks: &[IdentityCheck]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn failures(checks: &[IdentityCheck]) -> Vec<&IdentityCheck> {
    checks.iter().filter(|c| !c.passed).collect()
}
