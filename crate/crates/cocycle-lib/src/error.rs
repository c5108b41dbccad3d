use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("malformed triple-point file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Chain(#[from] chain_algebra::ChainError),
}
