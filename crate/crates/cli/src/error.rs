use std::path::PathBuf;

use thiserror::Error;

/// Everything that stops a command before a verdict. All of these exit with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema: {0}")]
    Schema(String),
    #[error("structure: {0}")]
    Structural(String),
    #[error(transparent)]
    Core(#[from] freeperm::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(e: serde_json::Error) -> Self {
        CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
