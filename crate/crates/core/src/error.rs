use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("weight {weight} is not dominant integral")]
    NotDominantIntegral { weight: String },
    #[error("Weyl group of order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("registry validation failed for {record}: {reason}")]
    Validation { record: String, reason: String },
    #[error("unknown schema version {0:?}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
