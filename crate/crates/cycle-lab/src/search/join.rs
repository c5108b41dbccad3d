use std::collections::{BTreeSet, HashMap, HashSet};

use chain_algebra::{g_map, is_cycle, Chain, GradedTerm, XSet};
use quandle_core::{Elem, FiniteQuandle, InnerPerm};
use term_structure::catalogue;

use crate::error::CycleError;

pub type CanonicalCycle = Vec<(GradedTerm, i64)>;

/// Lexicographically least term list over inner automorphisms, global sign
/// and the shift putting the lowest degree at 0.
pub fn canonical_form(c: &Chain, group: &[InnerPerm]) -> CanonicalCycle {
    let low = c.degrees().first().copied().unwrap_or(0);
    let mut best: Option<CanonicalCycle> = None;
    for g in group {
        for sign in [1i64, -1] {
            let mut image: CanonicalCycle = c
                .iter()
                .map(|(t, k)| {
                    let cols: Vec<Elem> = t.colors.iter().map(|&x| g.apply(x)).collect();
                    (GradedTerm::new_unchecked(t.degree - low, g.apply(t.index), &cols), k * sign)
                })
                .collect();
            image.sort();
            if best.as_ref().map_or(true, |b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap_or_default()
}

/// True iff no nonempty proper sub-multiset of `c` is a cycle.
pub fn is_primitive(c: &Chain, q: &FiniteQuandle) -> Result<bool, CycleError> {
    let entries: Vec<(GradedTerm, i64)> = c.iter().map(|(t, k)| (t.clone(), k)).collect();
    let mut take = vec![0i64; entries.len()];
    loop {
        let mut i = 0;
        while i < take.len() {
            take[i] += 1;
            if take[i] <= entries[i].1.abs() {
                break;
            }
            take[i] = 0;
            i += 1;
        }
        if i == take.len() {
            return Ok(true);
        }
        let partial: usize = take.iter().map(|&k| k as usize).sum();
        if partial as u64 == c.length() {
            continue;
        }
        let sub = Chain::from_terms(
            3,
            c.x_set(),
            entries.iter().zip(&take).map(|((t, k), &n)| (t.clone(), k.signum() * n)),
        )?;
        if is_cycle(&sub, q)? {
            return Ok(false);
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct JoinReport {
    /// Distinct signed family instances by size.
    pub instances_by_size: [usize; 6],
    pub probes: u64,
    /// Canonical forms of the primitive cycles found.
    pub cycles: BTreeSet<CanonicalCycle>,
}

/// Single-degree cycles up to length 5 assembled from one or two
/// instantiated f-connected families whose g-images cancel.
pub fn join_single_degree(q: &FiniteQuandle, max_length: usize) -> Result<JoinReport, CycleError> {
    if !(1..=5).contains(&max_length) {
        return Err(CycleError::InvalidParameter(format!("the join covers lengths up to 5, got {max_length}")));
    }
    let mut seen: HashSet<Chain> = HashSet::new();
    let mut pieces: Vec<(Chain, Chain)> = Vec::new();
    let mut report = JoinReport::default();
    for t in catalogue().into_iter().filter(|t| t.size() <= max_length) {
        let n = t.symbols as usize;
        let mut values = vec![0 as Elem; n];
        'values: loop {
            if t.admits(&values) {
                for u in q.elements() {
                    for flips in 0..(1u32 << t.bigons()) {
                        let Ok(terms) = t.instantiate(&values, 0, u, flips) else { continue };
                        let Ok(c) = Chain::from_signed(3, XSet::Graded, terms) else { continue };
                        if c.length() as usize != t.size() {
                            continue;
                        }
                        for piece in [c.clone(), c.negated()] {
                            if seen.insert(piece.clone()) {
                                report.instances_by_size[t.size()] += 1;
                                let g = g_map(&piece, q)?;
                                pieces.push((piece, g));
                            }
                        }
                    }
                }
            }
            for slot in values.iter_mut() {
                *slot += 1;
                if (*slot as usize) < q.size() {
                    continue 'values;
                }
                *slot = 0;
            }
            break;
        }
    }
    let group = q.inner_group();
    let mut found: Vec<Chain> = Vec::new();
    let mut by_image: HashMap<&Chain, Vec<usize>> = HashMap::new();
    for (i, (_, g)) in pieces.iter().enumerate() {
        by_image.entry(g).or_default().push(i);
    }
    for (i, (piece, g)) in pieces.iter().enumerate() {
        report.probes += 1;
        if g.is_zero() {
            found.push(piece.clone());
            continue;
        }
        let want = g.negated();
        for &j in by_image.get(&want).map(Vec::as_slice).unwrap_or(&[]) {
            report.probes += 1;
            let other = &pieces[j].0;
            if j <= i || piece.length() + other.length() > max_length as u64 {
                continue;
            }
            let sum = piece.plus(other)?;
            if sum.length() == piece.length() + other.length() {
                found.push(sum);
            }
        }
    }
    for c in found {
        if !is_cycle(&c, q)? {
            return Err(CycleError::InvalidParameter(format!("join produced a non-cycle {c:?}")));
        }
        if is_primitive(&c, q)? {
            report.cycles.insert(canonical_form(&c, &group));
        }
    }
    Ok(report)
}
