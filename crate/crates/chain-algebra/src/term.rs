use std::fmt;

use quandle_core::{Elem, FiniteQuandle};
use smallvec::SmallVec;

use crate::error::ChainError;

pub type Colors = SmallVec<[Elem; 4]>;

/// A generator `(degree, index; colors)`. Ordered by degree, then index,
/// then colors lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedTerm {
    pub degree: i32,
    pub index: Elem,
    pub colors: Colors,
}

impl GradedTerm {
    /// Rejects color tuples with two equal neighbours.
    pub fn new(degree: i32, index: Elem, colors: &[Elem]) -> Result<Self, ChainError> {
        if has_adjacent_repeat(colors) {
            return Err(ChainError::InvalidParameter(format!("colors {colors:?} repeat a neighbour")));
        }
        Ok(Self::new_unchecked(degree, index, colors))
    }

    pub fn new_unchecked(degree: i32, index: Elem, colors: &[Elem]) -> Self {
        GradedTerm { degree, index, colors: Colors::from_slice(colors) }
    }

    /// Placeholder degree and index used by the trivial X-set.
    pub fn trivial(colors: &[Elem]) -> Result<Self, ChainError> {
        Self::new(0, 0, colors)
    }

    pub fn arity(&self) -> usize {
        self.colors.len()
    }

    /// `index^{c_1 ... c_m}`.
    pub fn terminal_index(&self, q: &FiniteQuandle) -> Elem {
        q.act(self.index, &self.colors)
    }

    pub fn with_degree(&self, degree: i32) -> Self {
        GradedTerm { degree, ..self.clone() }
    }

    pub fn fits(&self, q: &FiniteQuandle) -> bool {
        q.contains(self.index as usize) && self.colors.iter().all(|&c| q.contains(c as usize))
    }
}

pub(crate) fn has_adjacent_repeat(colors: &[Elem]) -> bool {
    colors.windows(2).any(|w| w[0] == w[1])
}

impl fmt::Debug for GradedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {};", self.degree, self.index)?;
        for (i, c) in self.colors.iter().enumerate() {
            write!(f, "{}{c}", if i == 0 { " " } else { ", " })?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GradedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Signed faces of the color-deletion map. Degenerate faces are skipped.
pub fn f_faces(t: &GradedTerm) -> impl Iterator<Item = (GradedTerm, i64)> + '_ {
    (0..t.arity()).filter_map(move |i| {
        let mut colors = t.colors.clone();
        colors.remove(i);
        if has_adjacent_repeat(&colors) {
            return None;
        }
        let sign = if i % 2 == 0 { -1 } else { 1 };
        Some((GradedTerm { degree: t.degree, index: t.index, colors }, sign))
    })
}

/// Signed faces of the twisted map: entries before `i` and the index are
/// acted on by `c_i`, and the degree goes up by one when `graded`.
pub fn g_faces<'a>(
    t: &'a GradedTerm,
    q: &'a FiniteQuandle,
    graded: bool,
) -> impl Iterator<Item = (GradedTerm, i64)> + 'a {
    (0..t.arity()).filter_map(move |i| {
        let pivot = t.colors[i];
        let mut colors: Colors = t.colors[..i].iter().map(|&x| q.op(x, pivot)).collect();
        colors.extend_from_slice(&t.colors[i + 1..]);
        if has_adjacent_repeat(&colors) {
            return None;
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let (degree, index) = if graded { (t.degree + 1, q.op(t.index, pivot)) } else { (0, 0) };
        Some((GradedTerm { degree, index, colors }, sign))
    })
}
