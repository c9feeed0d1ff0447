//! CLI error type and exit-code mapping.

use std::fmt;
use std::path::PathBuf;

use cycleforge_core::sdf::Violation;

/// Errors surfaced by the CLI. Exit codes: 1 for input and validation
/// problems, 2 for numerical failures (fit did not converge, doubling
/// unreachable).
#[derive(Debug)]
pub enum CliError {
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Parse {
        line: u64,
        message: String,
    },
    Schema {
        field: String,
        message: String,
    },
    Validation {
        violations: Vec<Violation>,
    },
    /// A pipeline stage rejected its input.
    Stage {
        stage: &'static str,
        message: String,
    },
    /// A numerical procedure failed (exit code 2).
    Numerical {
        stage: &'static str,
        message: String,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Numerical { .. } => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => {
                write!(f, "io error on {}: {source}", path.display())
            }
            CliError::Parse { line, message } => {
                write!(f, "parse error at line {line}: {message}")
            }
            CliError::Schema { field, message } => {
                write!(f, "config error at '{field}': {message}")
            }
            CliError::Validation { violations } => {
                writeln!(f, "panel validation failed ({} violations):", violations.len())?;
                for v in violations {
                    writeln!(f, "  - {v}")?;
                }
                Ok(())
            }
            CliError::Stage { stage, message } => {
                write!(f, "pipeline stage '{stage}' failed: {message}")
            }
            CliError::Numerical { stage, message } => {
                write!(f, "numerical failure in stage '{stage}': {message}")
            }
        }
    }
}

impl std::error::Error for CliError {}
