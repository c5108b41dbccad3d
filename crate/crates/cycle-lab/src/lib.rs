//! Exact kernels of the face maps on slices of `Z x X`, the explicit cycles
//! and boundary identities used for lower bounds, pushing cycles forward
//! along inner automorphisms, and a bounded search for short cycles that
//! pair nontrivially with a cocycle.

pub mod boundary;
mod error;
pub mod families;
pub mod kernel;
mod named;
mod push;
pub mod search;
mod slice;

pub use boundary::{verify_boundary_identity, BoundaryIdentity, IdentityReport};
pub use error::CycleError;
pub use kernel::{hermite_normal_form, kernel_fg, lattice_coords, KernelBasis, KernelListing};
pub use named::{check_cycle, verify_named_cycle, CycleReport, NamedCycle};
pub use push::push_forward;
pub use search::{
    canonical_form, dfs_single_degree_cycles, estimate_nodes, join_single_degree, root_terms, search_min_cycles,
    BudgetReport, CaseProfile, Certificate, DegreeWindow, FoundCycle, JoinReport, SearchConfig, SearchOutcome,
    DEFAULT_BUDGET, MAX_SEARCH_LENGTH,
};
pub use slice::{IndexFilter, SliceBasis};
