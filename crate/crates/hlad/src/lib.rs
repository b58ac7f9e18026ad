//! File formats and command implementations for the `hlad` binary.

pub mod commands;
pub mod json;
pub mod text;

use hlad_core::arakawa_suzuki::DEFAULT_CAPACITY;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] hlad_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for anything the caller can fix by changing the input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use hlad_core::Error as E;
        match self {
            CliError::Core(E::Inconsistent(_) | E::ResidualSubspace { .. }) => 1,
            _ => 2,
        }
    }
}

/// Dimension cap for tensor-space computations, overridable through
/// `HLAD_CAPACITY`.
pub fn capacity() -> Result<usize, CliError> {
    match std::env::var("HLAD_CAPACITY") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("HLAD_CAPACITY={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_CAPACITY),
    }
}
