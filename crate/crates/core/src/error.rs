use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("point kind mismatch: {0}")]
    PointKind(String),
    #[error("unsupported delta {delta}: system {system} certifies only delta <= {bound}")]
    UnsupportedDelta {
        system: String,
        delta: String,
        bound: String,
    },
    #[error("verification failure: {0}")]
    VerificationFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
