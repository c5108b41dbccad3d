use std::collections::BTreeSet;

use chain_algebra::{Chain, Coeff, GradedTerm, XSet};
use quandle_core::{dihedral_order, is_octahedral, Elem, FiniteQuandle};

use crate::error::CycleError;

/// `(sign, i, j, k)` meaning `sign (a_i, a_j, a_k)` with `a_i = a_0 + i s`.
type BlockTerm = (Coeff, u8, u8, u8);

const R7_BLOCKS: [[BlockTerm; 8]; 3] = [
    [(1, 1, 3, 2), (1, 1, 6, 5), (-1, 2, 1, 6), (-1, 2, 3, 1), (-1, 5, 4, 6), (-1, 5, 6, 1), (1, 6, 1, 2), (1, 6, 4, 5)],
    [(1, 2, 5, 3), (1, 2, 6, 4), (-1, 3, 1, 5), (-1, 3, 5, 2), (-1, 4, 2, 5), (-1, 4, 6, 2), (1, 5, 1, 3), (1, 5, 2, 4)],
    [(1, 1, 4, 3), (1, 1, 5, 4), (-1, 3, 2, 6), (-1, 3, 4, 1), (-1, 4, 3, 6), (-1, 4, 5, 1), (1, 6, 2, 3), (1, 6, 3, 4)],
];

fn require_r7(q: &FiniteQuandle) -> Result<(), CycleError> {
    match dihedral_order(q) {
        Some(7) => Ok(()),
        _ => Err(CycleError::InvalidParameter(format!("{} is not R7", q.name()))),
    }
}

/// The three 8-term blocks at `(n, w)` built on the progression
/// `a_i = a_0 + i s`.
pub fn r7_blocks(q: &FiniteQuandle, n: i32, w: Elem, a0: Elem, s: Elem) -> Result<[Chain; 3], CycleError> {
    require_r7(q)?;
    if s % 7 == 0 || w >= 7 || a0 >= 7 {
        return Err(CycleError::InvalidParameter(format!("need w, a0 in R7 and s != 0, got {w}, {a0}, {s}")));
    }
    let a = |i: u8| ((a0 as usize + i as usize * s as usize) % 7) as Elem;
    let build = |block: &[BlockTerm; 8]| -> Result<Chain, CycleError> {
        let terms: Result<Vec<_>, _> = block
            .iter()
            .map(|&(k, i, j, l)| GradedTerm::new(n, w, &[a(i), a(j), a(l)]).map(|t| (t, k)))
            .collect();
        Ok(Chain::from_terms(3, XSet::Graded, terms?)?)
    };
    Ok([build(&R7_BLOCKS[0])?, build(&R7_BLOCKS[1])?, build(&R7_BLOCKS[2])?])
}

/// `α B_1 + β B_2 + (α + β) B_3`.
pub fn r7_kernel_element(blocks: &[Chain; 3], alpha: Coeff, beta: Coeff) -> Result<Chain, CycleError> {
    Ok(Chain::zero(3, XSet::Graded)
        .add_scaled(&blocks[0], alpha)?
        .add_scaled(&blocks[1], beta)?
        .add_scaled(&blocks[2], alpha + beta)?)
}

/// Supports of the nonzero block combinations with `|α|, |β| <= bound`.
pub fn block_supports(blocks: &[Chain; 3], bound: Coeff) -> Result<BTreeSet<usize>, CycleError> {
    let mut out = BTreeSet::new();
    for alpha in -bound..=bound {
        for beta in -bound..=bound {
            if (alpha, beta) != (0, 0) {
                out.insert(r7_kernel_element(blocks, alpha, beta)?.support());
            }
        }
    }
    Ok(out)
}

/// Recovers `(α, β)` if `c` is a block combination.
pub fn block_coordinates(blocks: &[Chain; 3], c: &Chain) -> Result<Option<(Coeff, Coeff)>, CycleError> {
    let lead = |b: &Chain| b.iter().next().map(|(t, k)| c.coeff(t) * k).unwrap_or(0);
    let (alpha, beta) = (lead(&blocks[0]), lead(&blocks[1]));
    Ok((r7_kernel_element(blocks, alpha, beta)? == *c).then_some((alpha, beta)))
}

/// `(sign, a, b, c)` color triples.
type Triple = (Coeff, Elem, Elem, Elem);

/// `p_2`, `p_4`, `p_5` are one, two and three steps along 1, 2, 4, 5.
fn p_shift(p: Elem, k: u8) -> Elem {
    let cycle: [Elem; 4] = [1, 2, 4, 5];
    let i = cycle.iter().position(|&x| x == p).expect("p in {1,2,4,5}");
    cycle[(i + k as usize) % 4]
}

fn zero_gammas() -> Vec<(String, Vec<Triple>)> {
    vec![
        ("01".into(), vec![(1, 0, 3, 0), (-1, 3, 0, 3)]),
        ("02".into(), vec![(1, 0, 1, 4), (1, 0, 4, 1), (-1, 3, 1, 4), (-1, 3, 4, 1)]),
        ("03".into(), vec![(1, 0, 2, 5), (1, 0, 5, 2), (-1, 3, 2, 5), (-1, 3, 5, 2)]),
        ("04".into(), vec![(1, 1, 4, 0), (1, 4, 1, 0), (-1, 1, 4, 3), (-1, 4, 1, 3)]),
        (
            "05".into(),
            vec![(1, 1, 4, 0), (1, 4, 1, 0), (1, 2, 5, 3), (1, 5, 2, 3), (-1, 3, 1, 4), (-1, 3, 4, 1), (-1, 3, 2, 5), (-1, 3, 5, 2)],
        ),
        (
            "06".into(),
            vec![(1, 1, 4, 0), (1, 4, 1, 0), (1, 2, 5, 0), (1, 5, 2, 0), (-1, 3, 1, 4), (-1, 3, 4, 1), (-1, 3, 2, 5), (-1, 3, 5, 2)],
        ),
    ]
}

fn p_gammas(p: Elem) -> Vec<(String, Vec<Triple>)> {
    let (p1, p2, p4) = (p, p_shift(p, 1), p_shift(p, 2));
    vec![
        (format!("{p}1"), vec![(1, 0, 3, p2), (1, 0, p2, p4), (1, 0, p4, 3), (-1, 3, p2, p4), (-1, 3, p4, 3)]),
        (format!("{p}2"), vec![(1, 3, 0, p2), (1, 3, p1, 0), (1, 3, p2, p1), (-1, 0, p1, 0), (-1, 0, p2, p1)]),
        (
            format!("{p}3"),
            vec![
                (1, p2, 0, 3),
                (1, p2, 3, 0),
                (1, p2, p1, p4),
                (1, p2, p4, p1),
                (1, 0, p2, p4),
                (1, 0, p4, 3),
                (1, 3, p1, 0),
                (1, 3, p2, p1),
                (-1, 0, p1, 0),
                (-1, 0, p2, p1),
                (-1, p1, p4, p2),
                (-1, p4, p1, p2),
                (-1, 3, p2, p4),
                (-1, 3, p4, 3),
            ],
        ),
    ]
}

/// The index-0 kernel chains over `O_6` at degree `n`, labelled `0j` and
/// `pj`, grouped by the terminal index they reach.
pub fn o6_gamma_chains(q: &FiniteQuandle, n: i32) -> Result<Vec<(Elem, String, Chain)>, CycleError> {
    if !is_octahedral(q) {
        return Err(CycleError::InvalidParameter(format!("{} is not O6", q.name())));
    }
    let mut out = Vec::new();
    let groups = std::iter::once((0, zero_gammas())).chain([1, 2, 4, 5].map(|p| (p, p_gammas(p))));
    for (v, list) in groups {
        for (label, triples) in list {
            let terms: Result<Vec<_>, _> = triples
                .iter()
                .map(|&(k, a, b, c)| GradedTerm::new(n, 0, &[a, b, c]).map(|t| (t, k)))
                .collect();
            out.push((v, label, Chain::from_terms(3, XSet::Graded, terms?)?));
        }
    }
    Ok(out)
}
