use chain_algebra::{Chain, Colors, GradedTerm, XSet};
use quandle_core::{dihedral_order, Elem, FiniteQuandle, OCTAHEDRAL_DUAL_ISO};

use crate::error::StructureError;

/// Which of the four cancellation patterns a 3-term has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermType {
    /// `a = c` and `a^b = c`.
    Zero,
    /// `a = c` and `a^b != c`.
    One,
    /// `a != c` and `a^b = c`.
    Two,
    /// `a != c` and `a^b != c`.
    Three,
}

impl TermType {
    pub fn value(self) -> u8 {
        self as u8
    }
}

pub fn classify_type(t: &GradedTerm, q: &FiniteQuandle) -> Result<TermType, StructureError> {
    let [a, b, c] = match t.colors.as_slice() {
        &[a, b, c] => [a, b, c],
        _ => return Err(StructureError::InvalidParameter(format!("{t} is not a 3-term"))),
    };
    if !t.fits(q) {
        return Err(StructureError::InvalidParameter(format!("{t} is not over {}", q.name())));
    }
    Ok(match (a == c, q.op(a, b) == c) {
        (true, true) => TermType::Zero,
        (true, false) => TermType::One,
        (false, true) => TermType::Two,
        (false, false) => TermType::Three,
    })
}

fn require_graded(c: &Chain) -> Result<(), StructureError> {
    if c.x_set() != XSet::Graded {
        return Err(StructureError::InvalidParameter("needs the graded X-set".into()));
    }
    Ok(())
}

/// The reverse of one term: negated degree, index moved to `u^{a_1...a_m}`,
/// each color acted on by everything to its right.
pub fn reverse_term(t: &GradedTerm, q: &FiniteQuandle) -> GradedTerm {
    let m = t.arity();
    let colors: Colors = (0..m).map(|i| q.act(t.colors[i], &t.colors[i + 1..])).collect();
    GradedTerm { degree: -t.degree, index: t.terminal_index(q), colors }
}

/// Reverses a chain over `q`; the result lives over `q.dual()`.
pub fn reverse(c: &Chain, q: &FiniteQuandle) -> Result<Chain, StructureError> {
    require_graded(c)?;
    c.check_fits(q)?;
    Ok(c.map_terms(XSet::Graded, |t| (reverse_term(t, q), 1))?)
}

/// Relabels every element through `map`.
pub fn relabel(c: &Chain, map: &[Elem]) -> Result<Chain, StructureError> {
    let x_set = c.x_set();
    Ok(c.map_terms(x_set, |t| {
        let colors: Colors = t.colors.iter().map(|&x| map[x as usize]).collect();
        let index = if x_set == XSet::Graded { map[t.index as usize] } else { t.index };
        (GradedTerm { degree: t.degree, index, colors }, 1)
    })?)
}

/// Reverse for `O_6`, pulled back along the isomorphism to its dual so that
/// the result is again a chain over `O_6`.
pub fn reverse_octahedral(c: &Chain) -> Result<Chain, StructureError> {
    let o = FiniteQuandle::octahedral();
    // the isomorphism is its own inverse
    relabel(&reverse(c, &o)?, &OCTAHEDRAL_DUAL_ISO)
}

/// The mirror symmetry of `R_n`:
/// `(k, w; x_1..x_m) -> (k, -s w; s(x_m - w), ..., s(x_1 - w))`, `s = (-1)^k`.
pub fn reflect_dihedral(c: &Chain, q: &FiniteQuandle) -> Result<Chain, StructureError> {
    let Some(n) = dihedral_order(q) else {
        return Err(StructureError::InvalidParameter(format!("{} is not dihedral", q.name())));
    };
    require_graded(c)?;
    c.check_fits(q)?;
    let n = n as i64;
    Ok(c.map_terms(XSet::Graded, |t| {
        let s: i64 = if t.degree.rem_euclid(2) == 0 { 1 } else { -1 };
        let w = t.index as i64;
        let colors: Colors = t
            .colors
            .iter()
            .rev()
            .map(|&x| (s * (x as i64 - w)).rem_euclid(n) as Elem)
            .collect();
        let index = (-s * w).rem_euclid(n) as Elem;
        (GradedTerm { degree: t.degree, index, colors }, 1)
    })?)
}

/// Shifts every degree by `delta`.
pub fn sigma_shift(c: &Chain, delta: i32) -> Result<Chain, StructureError> {
    require_graded(c)?;
    Ok(c.map_terms(XSet::Graded, |t| (t.with_degree(t.degree + delta), 1))?)
}
