use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown ensemble {0:?} (expected ginibre, normal, nilpotent-shift or hyponormal-diag)")]
    BadEnsemble(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Numeric(#[from] numrad_core::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

impl CliError {
    /// Process exit code: 3 for solver failures, 2 for everything the user
    /// can fix by changing the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(
                numrad_core::Error::NoConvergence { .. } | numrad_core::Error::Timeout { .. },
            ) => EXIT_NUMERIC,
            _ => EXIT_INPUT,
        }
    }
}
