use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("malformed chain file: {0}")]
    Malformed(String),
}
