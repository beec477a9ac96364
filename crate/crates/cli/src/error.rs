use std::path::PathBuf;

use sombor_core::{DecompositionError, OracleError, SequenceError, SwapError, TreeError};
use thiserror::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_VERIFICATION: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid degree sequence: {0}")]
    Sequence(#[from] SequenceError),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
    #[error("invalid tree JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Decomposition(#[from] DecompositionError),
    #[error("{0}")]
    Swap(#[from] SwapError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Oracle(OracleError::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Oracle(OracleError::CountMismatch { .. }) => EXIT_VERIFICATION,
            _ => EXIT_VALIDATION,
        }
    }
}
