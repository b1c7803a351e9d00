use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] indigraph_core::Error),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("catalog {}: {reason}", path.display())]
    Catalog { path: PathBuf, reason: String },

    #[error("graph json: {0}")]
    GraphJson(String),
}

impl CliError {
    /// 2 for usage and input problems, 3 when a search budget ran out.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_budget() => 3,
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
