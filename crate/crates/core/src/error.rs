use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed alist input. `line` is 1-based.
    #[error("alist line {line}: {msg}")]
    Alist { line: usize, msg: String },

    #[error("matrix is rank deficient: rank {rank}, need {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("check node {row} has degree {degree}; checks of degree < 2 are not supported")]
    LowDegreeCheck { row: usize, degree: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("K = {k} exceeds the exhaustive enumeration limit of {limit}; skip the d_H computation")]
    EnumerationLimit { k: usize, limit: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("insufficient errors: no decoding errors observed in {frames} frames")]
    InsufficientErrors { frames: u64 },

    #[error("unknown code '{0}'")]
    UnknownCode(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// True for failures caused by the code definition itself rather than
    /// by decoder or campaign settings.
    pub fn is_code_error(&self) -> bool {
        matches!(
            self,
            Error::Alist { .. }
                | Error::RankDeficient { .. }
                | Error::LowDegreeCheck { .. }
                | Error::UnknownCode(_)
        )
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}
