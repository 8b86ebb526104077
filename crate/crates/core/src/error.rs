use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no splice exists between the two convex sets")]
    NoSplice,

    #[error("n = {n} is too small: the matching needs index {needed}")]
    InsufficientN { n: usize, needed: usize },

    #[error("instance of size {size} exceeds the exhaustive-search guard {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
