//! Process-level failure classification.
//!
//! Two kinds of trouble end a command: the data refusing the request
//! (validation findings, empty selections, unknown reference keys) and
//! defective input (unreadable files, schema mismatches, parse errors).
//! They map to distinct exit codes so scripts can tell them apart:
//! domain failures exit 1, input failures exit 2. Success exits 0, and
//! usage errors exit 2 through the argument parser itself.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Domain,
    Input,
}

/// A command failure carrying its exit code and operator-facing message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    kind: Kind,
    message: String,
}

impl Failure {
    /// The data refused the request: exit code 1.
    pub fn domain(message: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Domain,
            message: message.into(),
        }
    }

    /// Defective or unreadable input: exit code 2.
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Input,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Kind::Domain => 1,
            Kind::Input => 2,
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}
