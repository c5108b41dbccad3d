use chain_algebra::ChainError;
use cocycle_lib::CocycleError;
use quandle_core::QuandleError;
use term_structure::StructureError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CycleError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}
