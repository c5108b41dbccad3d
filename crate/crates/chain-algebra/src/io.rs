use std::fmt;

use quandle_core::Elem;

use crate::chain::{Chain, XSet};
use crate::error::ChainError;
use crate::term::GradedTerm;

impl fmt::Display for Chain {
    /// Chain file format: `arity m graded|trivial`, then
    /// `coeff degree index a_1 ... a_m` per term in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arity {} {}", self.arity(), self.x_set().keyword())?;
        for (t, k) in self.iter() {
            write!(f, "{k} {} {}", t.degree, t.index)?;
            for c in &t.colors {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn parse_chain(text: &str) -> Result<Chain, ChainError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| ChainError::Malformed("empty chain file".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let (arity, x_set) = match head.as_slice() {
        ["arity", m, kind] => {
            let m: usize = m.parse().map_err(|_| ChainError::Malformed(format!("bad arity {m:?}")))?;
            let x = match *kind {
                "graded" => XSet::Graded,
                "trivial" => XSet::Trivial,
                other => return Err(ChainError::Malformed(format!("unknown X-set {other:?}"))),
            };
            (m, x)
        }
        _ => return Err(ChainError::Malformed(format!("bad header {header:?}"))),
    };
    let mut chain = Chain::zero(arity, x_set);
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != arity + 3 {
            return Err(ChainError::Malformed(format!("line {no}: expected {} fields", arity + 3)));
        }
        let bad = |what: &str| ChainError::Malformed(format!("line {no}: bad {what}"));
        let k: i64 = fields[0].parse().map_err(|_| bad("coefficient"))?;
        let mut degree: i32 = fields[1].parse().map_err(|_| bad("degree"))?;
        let mut index: Elem = fields[2].parse().map_err(|_| bad("index"))?;
        let colors: Result<Vec<Elem>, _> = fields[3..].iter().map(|s| s.parse()).collect();
        let colors = colors.map_err(|_| bad("color"))?;
        if x_set == XSet::Trivial {
            degree = 0;
            index = 0;
        }
        let t = GradedTerm::new(degree, index, &colors).map_err(|e| ChainError::Malformed(format!("line {no}: {e}")))?;
        chain.add_term(t, k)?;
    }
    Ok(chain)
}
