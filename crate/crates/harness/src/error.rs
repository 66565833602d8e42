use std::path::PathBuf;

use indpoly::{BoundError, CoverError, GraphError, PolyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{source_name}:{line}: {message}")]
    Parse { source_name: String, line: usize, message: String },
    #[error("invalid input {input:?}: {message}")]
    Input { input: String, message: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("graph has {n} vertices, above the cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("malformed records: {0}")]
    Records(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl HarnessError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.into(), source }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
