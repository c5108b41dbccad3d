use chain_algebra::{Chain, GradedTerm, XSet};
use quandle_core::{Elem, FiniteQuandle};

use crate::error::CycleError;

/// `Σ ε (a^w, b^w, c^w)` for the inner word `w = g_1 g_2 ... g_k`.
pub fn push_forward(c: &Chain, word: &[Elem], q: &FiniteQuandle) -> Result<Chain, CycleError> {
    if c.x_set() != XSet::Trivial {
        return Err(CycleError::InvalidParameter("push forward acts on chains over the trivial X-set".into()));
    }
    if !c.is_zero() && c.arity() != 3 {
        return Err(CycleError::InvalidParameter(format!("arity {} chain, expected 3", c.arity())));
    }
    if let Some(&g) = word.iter().find(|&&g| !q.contains(g as usize)) {
        return Err(CycleError::InvalidParameter(format!("generator {g} is not in {}", q.name())));
    }
    c.check_fits(q)?;
    Ok(c.map_terms(XSet::Trivial, |t| {
        let cols: Vec<Elem> = t.colors.iter().map(|&x| q.act(x, word)).collect();
        (GradedTerm::new_unchecked(0, 0, &cols), 1)
    })?)
}
