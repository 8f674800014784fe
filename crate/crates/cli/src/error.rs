use std::io;
use std::path::PathBuf;

use monotone_minplus::Error as CoreError;

pub const EXIT_PARSE: i32 = 3;
pub const EXIT_VALIDATION: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;
pub const EXIT_OVERFLOW: i32 = 6;
pub const EXIT_IO: i32 = 7;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Core(CoreError::Overflow { .. } | CoreError::PrecisionWindowExceeded { .. }) => EXIT_OVERFLOW,
            CliError::Core(_) => EXIT_VALIDATION,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
