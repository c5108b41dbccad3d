//! Structure of 3-terms and chains: cancellation types, reverse and
//! reflection symmetries, splitting into f- or g-connected pieces, the
//! census of small f-connected families and the `O_6` index tables built on
//! top of it.

mod components;
mod error;
mod family;
mod index_tables;
mod symmetry;

pub use components::{connected_components, is_connected, Components, FaceMode, MAX_COMPONENT_INPUT};
pub use error::StructureError;
pub use family::{
    canonical_key, catalogue, enumerate_f_connected, f_connected_types, identify, is_valid_family, CanonicalKey,
    FamilyTemplate, SymbolicTerm, Token, CENSUS_SYMBOLS, MAX_FAMILY_SIZE,
};
pub use index_tables::{index_pattern_tables, reported_shapes, IndexPatternRow};
pub use symmetry::{
    classify_type, reflect_dihedral, relabel, reverse, reverse_octahedral, reverse_term, sigma_shift, TermType,
};
