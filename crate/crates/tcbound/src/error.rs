use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("binomial index out of range: k = {k} exceeds n = {n}")]
    BinomialRange { n: u64, k: u64 },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("group mismatch: order {left} vs order {right}")]
    GroupMismatch { left: usize, right: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("element is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),

    #[error("coefficient modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("algebra failed validation:\n{0}")]
    InvalidAlgebra(String),

    #[error("class `{0}` is not a zero-divisor (its diagonal restriction is nonzero)")]
    NotZeroDivisor(String),

    #[error("invalid descriptor field `{field}`: {message}")]
    Descriptor { field: String, message: String },

    #[error("inconsistent bounds: rule `{first_rule}` conflicts with rule `{second_rule}`: {message}")]
    Inconsistency {
        first_rule: String,
        second_rule: String,
        message: String,
    },

    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
