use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Chain(#[from] chain_algebra::ChainError),
    #[error(transparent)]
    Quandle(#[from] quandle_core::QuandleError),
}
