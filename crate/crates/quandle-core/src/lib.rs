//! Finite quandles given by operation tables.
//!
//! Elements are `u8` representatives `0..n`. Besides table-backed
//! construction the crate provides the dihedral family `R_n`, the
//! octahedral quandle `O_6`, duals, isomorphism checks and the inner
//! action by column permutations.

mod error;
mod octahedron;
mod perm;
mod quandle;

pub use error::QuandleError;
pub use octahedron::OctahedronModel;
pub use perm::InnerPerm;
pub use quandle::{parse_table, AxiomReport, Elem, FiniteQuandle, Violation, MAX_ORDER};

/// The isomorphism `O_6 -> dual(O_6)` swapping the labels 2 and 5.
pub const OCTAHEDRAL_DUAL_ISO: [Elem; 6] = [0, 1, 5, 3, 4, 2];

/// Quandle families selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Dihedral(usize),
    Octahedral,
}

impl Family {
    pub fn build(self) -> Result<FiniteQuandle, QuandleError> {
        match self {
            Family::Dihedral(n) => FiniteQuandle::dihedral(n),
            Family::Octahedral => Ok(FiniteQuandle::octahedral()),
        }
    }
}

/// Recognizes `R_n` tables by content.
pub fn dihedral_order(q: &FiniteQuandle) -> Option<usize> {
    let n = q.size();
    if n < 3 {
        return None;
    }
    let ok = q
        .elements()
        .all(|a| q.elements().all(|b| q.op(a, b) as usize == (2 * b as usize + n - a as usize) % n));
    ok.then_some(n)
}

/// True iff `q` has exactly the table of [`FiniteQuandle::octahedral`].
pub fn is_octahedral(q: &FiniteQuandle) -> bool {
    q.size() == 6 && q.rows() == FiniteQuandle::octahedral().rows()
}
