use std::fmt;
use std::path::Path;

use krak::{CracovianError, GroupError, InvolutionError, QuasigroupError, RepresentationError};

/// A failure mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    /// A law, homomorphism or arithmetic check failed (exit 1). The report
    /// has already been printed; the message summarises it.
    Violation(String),
    /// Invalid input or schema (exit 2).
    Input(String),
    /// Reading or writing a file failed (exit 3).
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }

    pub fn input(path: &Path, e: impl fmt::Display) -> Self {
        CliError::Input(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Violation(m) | CliError::Input(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<CracovianError> for CliError {
    fn from(e: CracovianError) -> Self {
        use CracovianError::*;
        match e {
            DimensionMismatch { .. } | ChainMismatch { .. } | NotSquare { .. } | NotColumn { .. } | Singular { .. } => {
                CliError::Violation(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        if e.is_violation() {
            CliError::Violation(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<InvolutionError> for CliError {
    fn from(e: InvolutionError) -> Self {
        if e.is_violation() {
            CliError::Violation(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<QuasigroupError> for CliError {
    fn from(e: QuasigroupError) -> Self {
        match e {
            QuasigroupError::Table(g) => g.into(),
            QuasigroupError::NotLatin { .. } | QuasigroupError::NotRightUnit { .. } => {
                CliError::Violation(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<RepresentationError> for CliError {
    fn from(e: RepresentationError) -> Self {
        match e {
            RepresentationError::Cracovian(c) => c.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}
