use std::collections::BTreeMap;
use std::fmt;

use quandle_core::{Elem, FiniteQuandle};

use crate::error::ChainError;
use crate::term::{f_faces, g_faces, GradedTerm};

pub type Coeff = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XSet {
    /// One point; degrees and indices are pinned to 0.
    Trivial,
    /// `Z x X` with `(n, u)^a = (n + 1, u^a)`.
    Graded,
}

impl XSet {
    pub fn keyword(self) -> &'static str {
        match self {
            XSet::Trivial => "trivial",
            XSet::Graded => "graded",
        }
    }
}

/// A sparse integer combination of terms of one arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    arity: usize,
    x_set: XSet,
    terms: BTreeMap<GradedTerm, Coeff>,
}

impl Chain {
    pub fn zero(arity: usize, x_set: XSet) -> Self {
        Chain { arity, x_set, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        arity: usize,
        x_set: XSet,
        terms: impl IntoIterator<Item = (GradedTerm, Coeff)>,
    ) -> Result<Self, ChainError> {
        let mut c = Chain::zero(arity, x_set);
        for (t, k) in terms {
            c.add_term(t, k)?;
        }
        Ok(c)
    }

    /// Same as [`Chain::from_terms`] with the coefficient first.
    pub fn from_signed(
        arity: usize,
        x_set: XSet,
        terms: impl IntoIterator<Item = (Coeff, GradedTerm)>,
    ) -> Result<Self, ChainError> {
        Chain::from_terms(arity, x_set, terms.into_iter().map(|(k, t)| (t, k)))
    }

    /// Shorthand for building chains from `(coeff, degree, index, colors)`.
    pub fn graded(entries: &[(Coeff, i32, Elem, &[Elem])]) -> Result<Self, ChainError> {
        let arity = entries.first().map_or(0, |e| e.3.len());
        let terms: Result<Vec<_>, _> = entries
            .iter()
            .map(|&(k, n, u, cols)| GradedTerm::new(n, u, cols).map(|t| (t, k)))
            .collect();
        Chain::from_terms(arity, XSet::Graded, terms?)
    }

    /// Shorthand for the trivial X-set from `(coeff, colors)`.
    pub fn trivial(entries: &[(Coeff, &[Elem])]) -> Result<Self, ChainError> {
        let arity = entries.first().map_or(0, |e| e.1.len());
        let terms: Result<Vec<_>, _> = entries
            .iter()
            .map(|&(k, cols)| GradedTerm::trivial(cols).map(|t| (t, k)))
            .collect();
        Chain::from_terms(arity, XSet::Trivial, terms?)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn x_set(&self) -> XSet {
        self.x_set
    }

    pub fn add_term(&mut self, t: GradedTerm, k: Coeff) -> Result<(), ChainError> {
        if t.arity() != self.arity {
            return Err(ChainError::InvalidParameter(format!(
                "term {t} has arity {}, chain has {}",
                t.arity(),
                self.arity
            )));
        }
        if self.x_set == XSet::Trivial && (t.degree != 0 || t.index != 0) {
            return Err(ChainError::InvalidParameter(format!("term {t} is graded but the chain is trivial")));
        }
        if k == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(t);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(k).ok_or(ChainError::Overflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, t: &GradedTerm) -> Coeff {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GradedTerm, Coeff)> {
        self.terms.iter().map(|(t, &k)| (t, k))
    }

    pub fn terms(&self) -> impl Iterator<Item = &GradedTerm> {
        self.terms.keys()
    }

    /// Number of distinct terms.
    pub fn support(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute coefficients.
    pub fn length(&self) -> u64 {
        self.terms.values().map(|k| k.unsigned_abs()).sum()
    }

    fn same_shape(&self, other: &Chain) -> Result<(), ChainError> {
        if self.is_zero() || other.is_zero() {
            return Ok(());
        }
        if self.arity != other.arity || self.x_set != other.x_set {
            return Err(ChainError::InvalidParameter(format!(
                "cannot combine arity {} {} with arity {} {}",
                self.arity,
                self.x_set.keyword(),
                other.arity,
                other.x_set.keyword()
            )));
        }
        Ok(())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Chain, k: Coeff) -> Result<Chain, ChainError> {
        self.same_shape(other)?;
        let mut out = if self.is_zero() {
            Chain::zero(other.arity, other.x_set)
        } else {
            self.clone()
        };
        for (t, c) in other.iter() {
            out.add_term(t.clone(), c.checked_mul(k).ok_or(ChainError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn plus(&self, other: &Chain) -> Result<Chain, ChainError> {
        self.add_scaled(other, 1)
    }

    pub fn minus(&self, other: &Chain) -> Result<Chain, ChainError> {
        self.add_scaled(other, -1)
    }

    pub fn scaled(&self, k: Coeff) -> Result<Chain, ChainError> {
        Chain::zero(self.arity, self.x_set).add_scaled(self, k)
    }

    pub fn negated(&self) -> Chain {
        Chain {
            arity: self.arity,
            x_set: self.x_set,
            terms: self.terms.iter().map(|(t, &k)| (t.clone(), -k)).collect(),
        }
    }

    /// Rebuilds the chain term by term; `map` may merge or cancel terms.
    pub fn map_terms(
        &self,
        x_set: XSet,
        mut map: impl FnMut(&GradedTerm) -> (GradedTerm, Coeff),
    ) -> Result<Chain, ChainError> {
        let mut out = Chain::zero(self.arity, x_set);
        for (t, k) in self.iter() {
            let (image, sign) = map(t);
            out.add_term(image, k.checked_mul(sign).ok_or(ChainError::Overflow)?)?;
        }
        Ok(out)
    }

    /// The sub-chain of terms with the given degree.
    pub fn degree_bucket(&self, degree: i32) -> Result<Chain, ChainError> {
        if self.x_set == XSet::Trivial {
            return Err(ChainError::InvalidParameter("degree buckets need the graded X-set".into()));
        }
        Ok(Chain {
            arity: self.arity,
            x_set: self.x_set,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.degree == degree)
                .map(|(t, &k)| (t.clone(), k))
                .collect(),
        })
    }

    /// Occupied degrees, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self.terms.keys().map(|t| t.degree).collect();
        d.dedup();
        d
    }

    /// Forgets degree and index.
    pub fn project_pi(&self) -> Chain {
        let mut out = Chain::zero(self.arity, XSet::Trivial);
        for (t, k) in self.iter() {
            let image = GradedTerm::new_unchecked(0, 0, &t.colors);
            // coefficients of a valid chain sum without overflow at desk scale
            out.add_term(image, k).expect("projection keeps arity");
        }
        out
    }

    pub fn check_fits(&self, q: &FiniteQuandle) -> Result<(), ChainError> {
        match self.terms.keys().find(|t| !t.fits(q)) {
            Some(t) => Err(ChainError::InvalidParameter(format!("term {t} uses elements outside {}", q.name()))),
            None => Ok(()),
        }
    }
}

fn face_map(
    c: &Chain,
    q: &FiniteQuandle,
    use_f: bool,
    use_g: bool,
) -> Result<Chain, ChainError> {
    if c.arity == 0 {
        return Err(ChainError::InvalidParameter("arity 0 has no faces".into()));
    }
    c.check_fits(q)?;
    let graded = c.x_set == XSet::Graded;
    let mut out = Chain::zero(c.arity - 1, c.x_set);
    for (t, k) in c.iter() {
        if use_f {
            for (face, s) in f_faces(t) {
                out.add_term(face, k.checked_mul(s).ok_or(ChainError::Overflow)?)?;
            }
        }
        if use_g {
            for (face, s) in g_faces(t, q, graded) {
                out.add_term(face, k.checked_mul(s).ok_or(ChainError::Overflow)?)?;
            }
        }
    }
    Ok(out)
}

/// Color deletion, linearly extended.
pub fn f_map(c: &Chain, q: &FiniteQuandle) -> Result<Chain, ChainError> {
    face_map(c, q, true, false)
}

/// The twisted face map, linearly extended.
pub fn g_map(c: &Chain, q: &FiniteQuandle) -> Result<Chain, ChainError> {
    face_map(c, q, false, true)
}

pub fn boundary(c: &Chain, q: &FiniteQuandle) -> Result<Chain, ChainError> {
    face_map(c, q, true, true)
}

pub fn is_cycle(c: &Chain, q: &FiniteQuandle) -> Result<bool, ChainError> {
    Ok(boundary(c, q)?.is_zero())
}

/// Per-degree cancellation data for a graded chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerReport {
    /// `(k, g(T_{k-1}) + f(T_k))` for every `k` from the lowest degree up to
    /// one past the highest.
    pub layers: Vec<(i32, Chain)>,
    pub lowest_f_vanishes: bool,
    pub highest_g_vanishes: bool,
}

impl LayerReport {
    pub fn all_vanish(&self) -> bool {
        self.layers.iter().all(|(_, r)| r.is_zero())
    }
}

pub fn layered_check(c: &Chain, q: &FiniteQuandle) -> Result<LayerReport, ChainError> {
    if c.x_set != XSet::Graded {
        return Err(ChainError::InvalidParameter("layered check needs the graded X-set".into()));
    }
    let degrees = c.degrees();
    let (Some(&lo), Some(&hi)) = (degrees.first(), degrees.last()) else {
        return Ok(LayerReport { layers: Vec::new(), lowest_f_vanishes: true, highest_g_vanishes: true });
    };
    let mut layers = Vec::new();
    let mut prev_g = Chain::zero(c.arity.saturating_sub(1), XSet::Graded);
    for k in lo..=hi + 1 {
        let bucket = c.degree_bucket(k)?;
        let fk = f_map(&bucket, q)?;
        layers.push((k, prev_g.plus(&fk)?));
        prev_g = g_map(&bucket, q)?;
    }
    Ok(LayerReport {
        lowest_f_vanishes: f_map(&c.degree_bucket(lo)?, q)?.is_zero(),
        highest_g_vanishes: g_map(&c.degree_bucket(hi)?, q)?.is_zero(),
        layers,
    })
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, k)) in self.iter().enumerate() {
            let sign = if k < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let mag = k.unsigned_abs();
            if mag == 1 {
                write!(f, "{sep}{sign}{t:?}")?;
            } else {
                write!(f, "{sep}{sign}{mag}{t:?}")?;
            }
        }
        Ok(())
    }
}
