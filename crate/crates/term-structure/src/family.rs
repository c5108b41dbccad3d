use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use chain_algebra::{f_faces, Coeff, GradedTerm};
use itertools::Itertools;
use quandle_core::Elem;

use crate::error::StructureError;

/// Symbols used by the brute-force census; five suffice for five terms.
pub const CENSUS_SYMBOLS: u8 = 5;
pub const MAX_FAMILY_SIZE: usize = 5;

const LETTERS: &[u8] = b"abcdefgh";

/// A signed 3-term over symbols `0..`; symbols print as `a, b, c, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolicTerm {
    pub sign: i8,
    pub colors: [u8; 3],
}

impl SymbolicTerm {
    pub const fn new(sign: i8, colors: [u8; 3]) -> Self {
        SymbolicTerm { sign, colors }
    }

    pub fn is_bigon(&self) -> bool {
        self.colors[0] == self.colors[2]
    }

    pub fn label(&self) -> String {
        self.colors.iter().map(|&s| LETTERS[s as usize] as char).collect()
    }
}

/// Shape token: a bigon forgets which of its two color words was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Bigon(u8, u8),
    Triangle([u8; 3]),
}

fn token(colors: [u8; 3]) -> Token {
    if colors[0] == colors[2] {
        Token::Bigon(colors[0].min(colors[1]), colors[0].max(colors[1]))
    } else {
        Token::Triangle(colors)
    }
}

/// Canonical form up to symbol renaming, global sign and bigon choice.
pub type CanonicalKey = Vec<(u8, Token)>;

pub fn canonical_key(terms: &[SymbolicTerm]) -> CanonicalKey {
    let syms: Vec<u8> = terms.iter().flat_map(|t| t.colors).collect::<BTreeSet<_>>().into_iter().collect();
    let mut best: Option<CanonicalKey> = None;
    for perm in (0..syms.len() as u8).permutations(syms.len()) {
        let rename: HashMap<u8, u8> = syms.iter().copied().zip(perm).collect();
        for flip in [1i8, -1] {
            let mut key: CanonicalKey = terms
                .iter()
                .map(|t| {
                    // positive terms sort first
                    let rank = if t.sign * flip > 0 { 0 } else { 1 };
                    (rank, token(t.colors.map(|s| rename[&s])))
                })
                .collect();
            key.sort();
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap_or_default()
}

fn as_term(colors: [u8; 3]) -> GradedTerm {
    GradedTerm::new_unchecked(0, 0, &colors)
}

fn face_sum(terms: &[SymbolicTerm]) -> BTreeMap<[u8; 2], i64> {
    let mut acc = BTreeMap::new();
    for t in terms {
        for (face, s) in f_faces(&as_term(t.colors)) {
            *acc.entry([face.colors[0], face.colors[1]]).or_insert(0) += s * t.sign as i64;
        }
    }
    acc.retain(|_, v| *v != 0);
    acc
}

fn is_minimal_null(terms: &[SymbolicTerm]) -> bool {
    if !face_sum(terms).is_empty() {
        return false;
    }
    (1..terms.len()).all(|r| {
        (0..terms.len())
            .combinations(r)
            .all(|sub| !face_sum(&sub.iter().map(|&i| terms[i]).collect::<Vec<_>>()).is_empty())
    })
}

/// Nondegenerate, free of a term together with its negative, null and minimal.
pub fn is_valid_family(terms: &[SymbolicTerm]) -> bool {
    let nondegenerate = terms.iter().all(|t| t.colors[0] != t.colors[1] && t.colors[1] != t.colors[2]);
    let efficient = terms
        .iter()
        .all(|t| !terms.iter().any(|u| u.colors == t.colors && u.sign == -t.sign));
    nondegenerate && efficient && is_minimal_null(terms)
}

/// A symbolic pattern of an f-connected family. Distinct symbols take
/// distinct values except for the pairs listed in `coincidences`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTemplate {
    pub id: String,
    pub symbols: u8,
    pub terms: Vec<SymbolicTerm>,
    pub coincidences: Vec<(u8, u8)>,
}

impl FamilyTemplate {
    pub fn new(id: impl Into<String>, terms: Vec<SymbolicTerm>, coincidences: Vec<(u8, u8)>) -> Self {
        let symbols = terms.iter().flat_map(|t| t.colors).max().map_or(0, |m| m + 1);
        FamilyTemplate { id: id.into(), symbols, terms, coincidences }
    }

    pub fn size(&self) -> usize {
        self.terms.len()
    }

    pub fn bigons(&self) -> usize {
        self.terms.iter().filter(|t| t.is_bigon()).count()
    }

    pub fn key(&self) -> CanonicalKey {
        canonical_key(&self.terms)
    }

    /// Identifies symbol `drop` with `keep`.
    pub fn merge_symbols(&self, keep: u8, drop: u8) -> Vec<SymbolicTerm> {
        self.terms
            .iter()
            .map(|t| SymbolicTerm::new(t.sign, t.colors.map(|s| if s == drop { keep } else { s })))
            .collect()
    }

    /// Whether `values[s]` is an allowed assignment of the symbols.
    pub fn admits(&self, values: &[Elem]) -> bool {
        if values.len() != self.symbols as usize {
            return false;
        }
        (0..self.symbols).tuple_combinations().all(|(x, y)| {
            values[x as usize] != values[y as usize]
                || self.coincidences.contains(&(x, y))
                || self.coincidences.contains(&(y, x))
        })
    }

    /// Concrete signed terms at the given degree and index. Bit `i` of
    /// `flips` selects the second color word for the `i`-th bigon.
    pub fn instantiate(
        &self,
        values: &[Elem],
        degree: i32,
        index: Elem,
        flips: u32,
    ) -> Result<Vec<(Coeff, GradedTerm)>, StructureError> {
        if !self.admits(values) {
            return Err(StructureError::InvalidParameter(format!("{values:?} is not admissible for {}", self.id)));
        }
        let mut bigon = 0;
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut colors = t.colors;
            if t.is_bigon() {
                if flips >> bigon & 1 == 1 {
                    colors = [colors[1], colors[0], colors[1]];
                }
                bigon += 1;
            }
            let concrete = colors.map(|s| values[s as usize]);
            out.push((t.sign as Coeff, GradedTerm::new(degree, index, &concrete)?));
        }
        Ok(out)
    }

    /// Text form with `<x,y>` for bigons.
    pub fn notation(&self) -> String {
        self.terms
            .iter()
            .map(|t| {
                let s = if t.sign > 0 { '+' } else { '-' };
                let l = |i: usize| LETTERS[t.colors[i] as usize] as char;
                if t.is_bigon() {
                    format!("{s}<{},{}>", l(0), l(1))
                } else {
                    format!("{s}({},{},{})", l(0), l(1), l(2))
                }
            })
            .join(" ")
    }
}

impl fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.notation())?;
        for (x, y) in &self.coincidences {
            write!(f, " [{}={} allowed]", LETTERS[*x as usize] as char, LETTERS[*y as usize] as char)?;
        }
        Ok(())
    }
}

fn pattern_from_key(key: &CanonicalKey) -> Vec<SymbolicTerm> {
    key.iter()
        .map(|&(rank, tok)| {
            let sign = if rank == 0 { 1 } else { -1 };
            let colors = match tok {
                Token::Bigon(x, y) => [x, y, x],
                Token::Triangle(c) => c,
            };
            SymbolicTerm::new(sign, colors)
        })
        .collect()
}

struct Census {
    all: Vec<[u8; 3]>,
    found: BTreeSet<Vec<SymbolicTerm>>,
}

impl Census {
    fn new() -> Self {
        let n = CENSUS_SYMBOLS;
        let all = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
            .filter(|t| t[0] != t[1] && t[1] != t[2])
            .collect();
        Census { all, found: BTreeSet::new() }
    }

    /// Terms with the 2-term `face` in their image, signed to cancel `against`.
    fn cancellers(&self, face: [u8; 2], against: i64) -> Vec<SymbolicTerm> {
        let mut out = BTreeSet::new();
        for z in 0..CENSUS_SYMBOLS {
            for colors in [[z, face[0], face[1]], [face[0], z, face[1]], [face[0], face[1], z]] {
                if colors[0] == colors[1] || colors[1] == colors[2] {
                    continue;
                }
                let coef: i64 = f_faces(&as_term(colors))
                    .filter(|(t, _)| t.colors.as_slice() == face)
                    .map(|(_, s)| s)
                    .sum();
                if coef != 0 {
                    let sign = if coef * against < 0 { 1 } else { -1 };
                    out.insert(SymbolicTerm::new(sign, colors));
                }
            }
        }
        out.into_iter().collect()
    }

    fn dfs(&mut self, chosen: &mut Vec<SymbolicTerm>, k: usize) {
        let residual = face_sum(chosen);
        if residual.is_empty() {
            if chosen.len() == k {
                let mut set = chosen.clone();
                set.sort();
                self.found.insert(set);
            }
            return;
        }
        if chosen.len() >= k {
            return;
        }
        let l1: i64 = residual.values().map(|v| v.abs()).sum();
        if l1 > 3 * (k - chosen.len()) as i64 {
            return;
        }
        let (&face, &v) = residual.iter().next().expect("nonempty residual");
        let root = chosen[0].colors;
        for t in self.cancellers(face, v) {
            if t.colors < root || chosen.iter().any(|c| c.colors == t.colors && c.sign == -t.sign) {
                continue;
            }
            chosen.push(t);
            self.dfs(chosen, k);
            chosen.pop();
        }
    }

    /// Instance types of minimal null families with exactly `k` terms.
    fn types(k: usize) -> BTreeMap<CanonicalKey, Vec<SymbolicTerm>> {
        let mut census = Census::new();
        for root in census.all.clone() {
            census.dfs(&mut vec![SymbolicTerm::new(1, root)], k);
        }
        let mut out = BTreeMap::new();
        for family in &census.found {
            if is_minimal_null(family) {
                out.entry(canonical_key(family)).or_insert_with(|| family.clone());
            }
        }
        out
    }
}

/// Instance types of f-connected families of size `k` up to renaming and
/// sign, before merging coincidences into their parents.
pub fn f_connected_types(k: usize) -> Result<Vec<Vec<SymbolicTerm>>, StructureError> {
    if k > MAX_FAMILY_SIZE {
        return Err(StructureError::Unsupported(format!("families of size {k} (limit {MAX_FAMILY_SIZE})")));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    Ok(Census::types(k).into_keys().map(|key| pattern_from_key(&key)).collect())
}

/// Templates of f-connected families of size `k`. An instance type that
/// arises from another by letting two symbols coincide, without creating a
/// new bigon, is folded into that type as an allowed coincidence.
pub fn enumerate_f_connected(k: usize) -> Result<Vec<FamilyTemplate>, StructureError> {
    let types = f_connected_types(k)?;
    let keys: BTreeSet<CanonicalKey> = types.iter().map(|t| canonical_key(t)).collect();
    let mut children = BTreeSet::new();
    let mut templates = Vec::new();
    for (i, pattern) in types.iter().enumerate() {
        let mut t = FamilyTemplate::new(format!("{k}#{}", i + 1), pattern.clone(), Vec::new());
        for (x, y) in (0..t.symbols).tuple_combinations() {
            let merged = t.merge_symbols(x, y);
            let same_shape = merged.iter().filter(|m| m.is_bigon()).count() == t.bigons();
            if same_shape && is_valid_family(&merged) {
                let key = canonical_key(&merged);
                if keys.contains(&key) {
                    children.insert(key);
                    t.coincidences.push((x, y));
                }
            }
        }
        templates.push(t);
    }
    templates.retain(|t| !children.contains(&t.key()));
    for (i, t) in templates.iter_mut().enumerate() {
        t.id = format!("{k}#{}", i + 1);
    }
    Ok(templates)
}

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;
const D: u8 = 3;

const fn p(colors: [u8; 3]) -> SymbolicTerm {
    SymbolicTerm::new(1, colors)
}

const fn m(colors: [u8; 3]) -> SymbolicTerm {
    SymbolicTerm::new(-1, colors)
}

/// The named families of sizes 2 to 5; bigons are written `(x,y,x)`.
pub fn catalogue() -> Vec<FamilyTemplate> {
    let cd = vec![(C, D)];
    let t = |id: &str, terms: &[SymbolicTerm], co: Vec<(u8, u8)>| FamilyTemplate::new(id, terms.to_vec(), co);
    vec![
        t("2", &[p([A, B, A]), m([B, A, B])], vec![]),
        t("3-i", &[p([A, B, A]), m([C, A, B]), m([C, B, A])], vec![]),
        t("3-ii", &[p([A, B, A]), m([A, B, C]), m([B, A, C])], vec![]),
        t("4-i", &[p([A, B, C]), p([A, C, A]), m([C, A, B]), m([B, C, B])], vec![]),
        t("4-ii", &[p([A, B, C]), p([A, C, D]), m([A, B, D]), m([B, C, D])], vec![]),
        t("4-iii", &[p([A, B, C]), p([B, A, C]), m([A, B, D]), m([B, A, D])], vec![]),
        t("4-iv", &[p([C, A, B]), p([C, B, A]), m([D, A, B]), m([D, B, A])], vec![]),
        t("4-v", &[p([C, A, B]), p([C, B, A]), m([A, B, D]), m([B, A, D])], cd.clone()),
        t("5-i", &[p([A, C, A]), p([B, C, B]), m([A, B, A]), m([A, C, B]), m([B, C, A])], vec![]),
        t("5-ii", &[p([A, B, C]), p([B, D, B]), m([A, B, D]), m([A, D, C]), m([D, B, C])], vec![]),
        t("5-iii", &[p([A, B, C]), p([A, D, A]), m([A, D, C]), m([D, A, B]), m([D, B, C])], vec![]),
        t("5-iv", &[p([A, B, C]), p([C, D, C]), m([A, D, C]), m([A, B, D]), m([B, C, D])], vec![]),
        t("5-v", &[p([A, B, C]), p([A, C, A]), m([D, A, B]), m([D, B, C]), m([D, C, A])], vec![]),
        t("5-vi", &[p([A, B, C]), p([A, C, A]), m([A, B, D]), m([B, C, D]), m([C, A, D])], vec![]),
        t("5-vii", &[p([A, B, C]), p([A, C, A]), m([C, A, B]), m([D, B, C]), m([D, C, B])], vec![]),
        t("5-viii", &[p([A, B, C]), p([A, C, A]), m([A, B, D]), m([B, A, D]), m([B, C, A])], vec![]),
        t("5-ix", &[p([A, B, C]), p([A, C, A]), m([B, C, A]), m([D, A, B]), m([D, B, A])], cd.clone()),
        t("5-x", &[p([C, B, A]), p([A, C, A]), m([A, B, D]), m([A, C, B]), m([B, A, D])], cd),
    ]
}

/// Catalogue entry with the same canonical form, if any.
pub fn identify(template: &FamilyTemplate) -> Option<FamilyTemplate> {
    let key = template.key();
    catalogue().into_iter().find(|c| c.key() == key)
}
