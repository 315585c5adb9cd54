use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("enumeration budget exceeded: {required} objects required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("support mismatch: {0}")]
    Support(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
    #[error("singularity analysis failed: {0}")]
    Singularity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
