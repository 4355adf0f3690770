use thiserror::Error;

/// Errors produced when parsing the text formats or validating
/// user-supplied data (certificates, ledger records, CLI input).
///
/// Contract violations inside the algebra itself (mixing arities,
/// reducing a polynomial of the wrong degree) panic instead; callers
/// are expected to validate untrusted input with these errors first.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    Degree { expected: u32, got: u32 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("malformed ledger record {id}: {reason}")]
    Ledger { id: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
