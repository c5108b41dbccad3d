use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("quandle axioms fail: {0}")]
    Axioms(String),
}
