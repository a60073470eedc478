//! Errors of the command layer and their exit codes.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Math(#[from] stabkit::Error),
    #[error("{0} check(s) failed")]
    Checks(usize),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for failed checks, 2 for bad input, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Checks(_) => 1,
            CliError::Usage(_) | CliError::Math(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
