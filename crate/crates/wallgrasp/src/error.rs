use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("stale tape: network parameters changed since the forward pass")]
    StaleTape,
    #[error("training diverged: {0}")]
    Diverged(String),
    #[error("missing artifact: {0}")]
    MissingArtifact(PathBuf),
    #[error("malformed file {path}: {reason}")]
    Malformed { path: PathBuf, reason: String },
    #[error("data collection yield below 1% ({successes}/{attempts} attempts)")]
    CollectionYield { successes: usize, attempts: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
