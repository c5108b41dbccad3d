use std::collections::HashMap;

use chain_algebra::{f_faces, g_faces, Chain, Coeff, GradedTerm, XSet};
use itertools::Itertools;
use quandle_core::FiniteQuandle;

use crate::error::StructureError;

/// Largest input accepted by [`connected_components`]; the split is found
/// by subset search.
pub const MAX_COMPONENT_INPUT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceMode {
    F,
    G,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Components {
    /// Positions of the input terms, one list per minimal null subset.
    Split(Vec<Vec<usize>>),
    /// The summed face image does not vanish.
    Residual(Chain),
}

type Faces = HashMap<GradedTerm, Coeff>;

fn faces_of(t: &GradedTerm, k: Coeff, mode: FaceMode, q: &FiniteQuandle) -> Faces {
    let mut out = Faces::new();
    let iter: Box<dyn Iterator<Item = (GradedTerm, i64)>> = match mode {
        FaceMode::F => Box::new(f_faces(t)),
        FaceMode::G => Box::new(g_faces(t, q, true)),
    };
    for (face, s) in iter {
        *out.entry(face).or_default() += s * k;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn sums_to_zero(faces: &[Faces], subset: &[usize]) -> bool {
    let mut acc = Faces::new();
    for &i in subset {
        for (t, &v) in &faces[i] {
            *acc.entry(t.clone()).or_default() += v;
        }
    }
    acc.values().all(|&v| v == 0)
}

/// Splits signed same-degree terms into minimal subsets whose face images
/// (under `f` or `g`) vanish.
pub fn connected_components(
    terms: &[(Coeff, GradedTerm)],
    mode: FaceMode,
    q: &FiniteQuandle,
) -> Result<Components, StructureError> {
    if terms.len() > MAX_COMPONENT_INPUT {
        return Err(StructureError::Unsupported(format!(
            "{} terms exceeds the subset search limit {MAX_COMPONENT_INPUT}",
            terms.len()
        )));
    }
    for (i, (k, t)) in terms.iter().enumerate() {
        if *k == 0 {
            return Err(StructureError::InvalidParameter(format!("term {t} has coefficient 0")));
        }
        if !t.fits(q) {
            return Err(StructureError::InvalidParameter(format!("{t} is not over {}", q.name())));
        }
        if terms[i + 1..].iter().any(|(k2, t2)| t2 == t && k2.signum() != k.signum()) {
            return Err(StructureError::InvalidParameter(format!("{t} occurs with both signs")));
        }
        if t.degree != terms[0].1.degree {
            return Err(StructureError::InvalidParameter("terms have different degrees".into()));
        }
    }
    let faces: Vec<Faces> = terms.iter().map(|(k, t)| faces_of(t, *k, mode, q)).collect();
    let all: Vec<usize> = (0..terms.len()).collect();
    if !sums_to_zero(&faces, &all) {
        let arity = terms.first().map_or(0, |(_, t)| t.arity()).saturating_sub(1);
        let mut residual = Chain::zero(arity, XSet::Graded);
        for f in &faces {
            for (t, &v) in f {
                residual.add_term(t.clone(), v)?;
            }
        }
        return Ok(Components::Residual(residual));
    }
    let mut remaining = all;
    let mut parts = Vec::new();
    while !remaining.is_empty() {
        // the smallest null subset through the first remaining term is minimal
        let first = remaining[0];
        let rest = &remaining[1..];
        let part = (0..=rest.len())
            .find_map(|r| {
                rest.iter().copied().combinations(r).find_map(|mut sub| {
                    sub.insert(0, first);
                    sums_to_zero(&faces, &sub).then_some(sub)
                })
            })
            .expect("the whole remainder is null");
        remaining.retain(|i| !part.contains(i));
        parts.push(part);
    }
    Ok(Components::Split(parts))
}

/// True iff the terms are null and admit no proper null subset.
pub fn is_connected(terms: &[(Coeff, GradedTerm)], mode: FaceMode, q: &FiniteQuandle) -> Result<bool, StructureError> {
    Ok(match connected_components(terms, mode, q)? {
        Components::Split(parts) => parts.len() == 1,
        Components::Residual(_) => false,
    })
}
