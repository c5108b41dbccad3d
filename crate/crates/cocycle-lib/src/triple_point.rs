use std::fmt;

use quandle_core::Elem;

use crate::cocycle::ThreeCocycle;
use crate::error::CocycleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A colored triple point: sign and the colors of the bottom, middle and top sheets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriplePoint {
    pub sign: Sign,
    pub colors: [Elem; 3],
}

impl TriplePoint {
    pub fn new(sign: Sign, colors: [Elem; 3]) -> Result<Self, CocycleError> {
        if colors[0] == colors[1] {
            return Err(CocycleError::InvalidParameter(format!("bottom and middle colors agree in {colors:?}")));
        }
        Ok(TriplePoint { sign, colors })
    }
}

impl fmt::Display for TriplePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        let [a, b, c] = self.colors;
        write!(f, "{s} {a} {b} {c}")
    }
}

/// Lines `+|- a b c`; `#` starts a comment.
pub fn parse_triple_points(text: &str) -> Result<Vec<TriplePoint>, CocycleError> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || CocycleError::Malformed(format!("line {}: {line:?}", no + 1));
        if fields.len() != 4 {
            return Err(bad());
        }
        let sign = match fields[0] {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(bad()),
        };
        let mut colors = [0; 3];
        for (slot, s) in colors.iter_mut().zip(&fields[1..]) {
            *slot = s.parse().map_err(|_| bad())?;
        }
        out.push(TriplePoint::new(sign, colors).map_err(|_| bad())?);
    }
    Ok(out)
}

/// `Σ sign · θ(a, b, c)` reduced mod the cocycle's modulus.
pub fn weight_sum(theta: &ThreeCocycle, points: &[TriplePoint]) -> Result<u64, CocycleError> {
    let m = theta.modulus();
    let n = theta.quandle().size();
    let mut acc = 0u64;
    for p in points {
        if p.colors.iter().any(|&c| c as usize >= n) {
            return Err(CocycleError::InvalidParameter(format!("colors {:?} outside {}", p.colors, theta.quandle().name())));
        }
        let v = theta.value(p.colors[0], p.colors[1], p.colors[2]) % m;
        acc = match p.sign {
            Sign::Plus => (acc + v) % m,
            Sign::Minus => (acc + m - v) % m,
        };
    }
    Ok(acc)
}
