use std::collections::BTreeMap;

use chain_algebra::{f_map, g_map, Chain, GradedTerm, XSet};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use quandle_core::{Elem, FiniteQuandle};

use crate::error::CycleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexFilter {
    One(Elem),
    All,
}

/// Arity-3 generators of one degree, optionally restricted to one index and
/// one terminal index `u^{abc}`, with the integer matrices of `f` and `g`.
#[derive(Debug, Clone)]
pub struct SliceBasis {
    quandle: FiniteQuandle,
    degree: i32,
    index: IndexFilter,
    terminal: Option<Elem>,
    generators: Vec<GradedTerm>,
    f_rows: Vec<GradedTerm>,
    g_rows: Vec<GradedTerm>,
    /// Row-major, one row per face term.
    f_matrix: Vec<Vec<i64>>,
    g_matrix: Vec<Vec<i64>>,
}

fn matrix(
    images: &[Chain],
) -> (Vec<GradedTerm>, Vec<Vec<i64>>) {
    let mut rows: BTreeMap<GradedTerm, usize> = BTreeMap::new();
    for c in images {
        for t in c.terms() {
            let next = rows.len();
            rows.entry(t.clone()).or_insert(next);
        }
    }
    // renumber in term order
    let labels: Vec<GradedTerm> = rows.keys().cloned().collect();
    let pos: BTreeMap<&GradedTerm, usize> = labels.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = vec![vec![0i64; images.len()]; labels.len()];
    for (j, c) in images.iter().enumerate() {
        for (t, k) in c.iter() {
            m[pos[t]][j] = k;
        }
    }
    (labels, m)
}

impl SliceBasis {
    pub fn new(q: &FiniteQuandle, degree: i32, index: IndexFilter, terminal: Option<Elem>) -> Result<Self, CycleError> {
        if let IndexFilter::One(u) = index {
            if !q.contains(u as usize) {
                return Err(CycleError::InvalidParameter(format!("index {u} is not in {}", q.name())));
            }
        }
        if let Some(v) = terminal {
            if !q.contains(v as usize) {
                return Err(CycleError::InvalidParameter(format!("terminal index {v} is not in {}", q.name())));
            }
        }
        let indices: Vec<Elem> = match index {
            IndexFilter::One(u) => vec![u],
            IndexFilter::All => q.elements().collect(),
        };
        let mut generators = Vec::new();
        for &u in &indices {
            for a in q.elements() {
                for b in q.elements().filter(|&b| b != a) {
                    for c in q.elements().filter(|&c| c != b) {
                        let t = GradedTerm::new_unchecked(degree, u, &[a, b, c]);
                        if terminal.map_or(true, |v| t.terminal_index(q) == v) {
                            generators.push(t);
                        }
                    }
                }
            }
        }
        let single = |t: &GradedTerm| Chain::from_terms(3, XSet::Graded, [(t.clone(), 1)]);
        let f_images: Vec<Chain> = generators.iter().map(|t| f_map(&single(t)?, q)).collect::<Result<_, _>>()?;
        let g_images: Vec<Chain> = generators.iter().map(|t| g_map(&single(t)?, q)).collect::<Result<_, _>>()?;
        let (f_rows, f_matrix) = matrix(&f_images);
        let (g_rows, g_matrix) = matrix(&g_images);
        Ok(SliceBasis { quandle: q.clone(), degree, index, terminal, generators, f_rows, g_rows, f_matrix, g_matrix })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn index(&self) -> IndexFilter {
        self.index
    }

    pub fn terminal(&self) -> Option<Elem> {
        self.terminal
    }

    pub fn generators(&self) -> &[GradedTerm] {
        &self.generators
    }

    pub fn f_matrix(&self) -> &[Vec<i64>] {
        &self.f_matrix
    }

    pub fn g_matrix(&self) -> &[Vec<i64>] {
        &self.g_matrix
    }

    pub fn f_rows(&self) -> &[GradedTerm] {
        &self.f_rows
    }

    pub fn g_rows(&self) -> &[GradedTerm] {
        &self.g_rows
    }

    /// `f` stacked over `g`.
    pub fn stacked(&self) -> Vec<Vec<i64>> {
        self.f_matrix.iter().chain(&self.g_matrix).cloned().collect()
    }

    /// The chain with the given coefficient on each generator.
    pub fn chain_of(&self, coeffs: &[BigInt]) -> Result<Chain, CycleError> {
        if coeffs.len() != self.generators.len() {
            return Err(CycleError::InvalidParameter(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.generators.len()
            )));
        }
        let mut c = Chain::zero(3, XSet::Graded);
        for (t, k) in self.generators.iter().zip(coeffs) {
            if k.is_zero() {
                continue;
            }
            let k = k.to_i64().ok_or_else(|| CycleError::InvalidParameter(format!("coefficient {k} overflows")))?;
            c.add_term(t.clone(), k)?;
        }
        Ok(c)
    }

    /// Coordinates of a chain supported on the generators.
    pub fn coords_of(&self, c: &Chain) -> Result<Vec<BigInt>, CycleError> {
        let mut out = vec![BigInt::zero(); self.generators.len()];
        for (t, k) in c.iter() {
            let i = self
                .generators
                .binary_search(t)
                .map_err(|_| CycleError::InvalidParameter(format!("term {t} is outside the slice")))?;
            out[i] = BigInt::from(k);
        }
        Ok(out)
    }
}
