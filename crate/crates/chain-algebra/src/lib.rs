//! Chains over a finite quandle with the trivial X-set or the graded
//! X-set `Z x X`, and the face maps `f`, `g` and `∂ = f + g`.
//!
//! Terms whose colors repeat a neighbour are never stored: the face maps
//! drop them before accumulating.

mod chain;
mod error;
mod io;
mod term;

pub use chain::{boundary, f_map, g_map, is_cycle, layered_check, Chain, Coeff, LayerReport, XSet};
pub use error::ChainError;
pub use io::parse_chain;
pub use term::{f_faces, g_faces, Colors, GradedTerm};
