//! Quandle 3-cocycles: Mochizuki's `ζ_n` on `R_n`, the mod 3 cocycle on
//! `O_6`, their pairing with chains, and weight sums over colored triple
//! points.

mod cocycle;
mod error;
mod triple_point;

pub use cocycle::{is_prime, mochizuki_value, ConditionReport, ThreeCocycle};
pub use error::CocycleError;
pub use triple_point::{parse_triple_points, weight_sum, Sign, TriplePoint};
