use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown claim {0:?}; run `roman claims` for the list")]
    UnknownClaim(String),
    #[error("enumeration of order {n} needs --allow-large (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] roman_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("bad worker count {0:?} in ROMAN_WORKERS")]
    Workers(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl PartialEq for HarnessError {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}
