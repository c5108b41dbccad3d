use chain_algebra::{boundary, Chain, GradedTerm, XSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use quandle_core::{Elem, FiniteQuandle};

use crate::error::CocycleError;

/// A 3-cochain with values in `Z/modulus`, stored as a dense `n^3` table.
/// Degenerate triples always carry 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCocycle {
    name: String,
    quandle: FiniteQuandle,
    modulus: u64,
    values: Vec<u64>,
}

/// Outcome of checking `θ ∘ ∂ = 0` on the arity-4 generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub checked: usize,
    /// Generators whose boundary pairs to a nonzero residue, with the residue.
    pub failures: Vec<([Elem; 4], u64)>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The raw formula evaluated on arbitrary integer lifts.
pub fn mochizuki_value(n: u64, a: i64, b: i64, c: i64) -> Result<u64, CocycleError> {
    let exp = u32::try_from(n).map_err(|_| CocycleError::InvalidParameter(format!("n = {n} too large")))?;
    let big_n = BigInt::from(n);
    let (b, c) = (BigInt::from(b), BigInt::from(c));
    let t = BigInt::from(2) * &c - &b;
    let numerator = b.pow(exp) + t.pow(exp) - BigInt::from(2) * c.pow(exp);
    let (quot, rem) = numerator.div_rem(&big_n);
    if !rem.is_zero() {
        return Err(CocycleError::Internal(format!("{n} does not divide {numerator}")));
    }
    let value = (BigInt::from(a) - b) * quot;
    let residue = value.mod_floor(&big_n);
    debug_assert!(!residue.is_negative());
    Ok(residue.to_u64().expect("residue below n"))
}

impl ThreeCocycle {
    /// Builds a cochain from explicit values; degenerate triples must be 0.
    pub fn from_values(
        name: impl Into<String>,
        quandle: FiniteQuandle,
        modulus: u64,
        mut value: impl FnMut(Elem, Elem, Elem) -> u64,
    ) -> Result<Self, CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::InvalidParameter("modulus must be positive".into()));
        }
        let n = quandle.size();
        let mut values = vec![0; n * n * n];
        for a in quandle.elements() {
            for b in quandle.elements() {
                for c in quandle.elements() {
                    let v = value(a, b, c) % modulus;
                    if (a == b || b == c) && v != 0 {
                        return Err(CocycleError::InvalidParameter(format!("degenerate triple ({a},{b},{c}) has value {v}")));
                    }
                    values[(a as usize * n + b as usize) * n + c as usize] = v;
                }
            }
        }
        Ok(ThreeCocycle { name: name.into(), quandle, modulus, values })
    }

    /// Mochizuki's cocycle on `R_n`, `n` an odd prime.
    pub fn mochizuki(n: usize) -> Result<Self, CocycleError> {
        if n % 2 == 0 || !is_prime(n as u64) {
            return Err(CocycleError::InvalidParameter(format!("{n} is not an odd prime")));
        }
        let q = FiniteQuandle::dihedral(n).map_err(|e| CocycleError::InvalidParameter(e.to_string()))?;
        let mut err = None;
        let cocycle = ThreeCocycle::from_values(format!("zeta{n}"), q, n as u64, |a, b, c| {
            if a == b || b == c {
                return 0;
            }
            mochizuki_value(n as u64, a as i64, b as i64, c as i64).unwrap_or_else(|e| {
                err = Some(e);
                0
            })
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(cocycle),
        }
    }

    /// The mod 3 cocycle on `O_6`: seed triples spread by the powers of `x -> x^0`.
    pub fn octahedral_eta() -> Result<Self, CocycleError> {
        const ONES: [[Elem; 3]; 5] = [[0, 1, 2], [0, 3, 1], [1, 2, 0], [1, 4, 2], [3, 1, 5]];
        const TWOS: [[Elem; 3]; 11] = [
            [0, 1, 5],
            [1, 0, 1],
            [1, 0, 5],
            [1, 2, 1],
            [1, 3, 1],
            [1, 3, 2],
            [1, 4, 5],
            [1, 5, 1],
            [3, 0, 1],
            [3, 1, 0],
            [3, 1, 2],
        ];
        let q = FiniteQuandle::octahedral();
        let stabilizer = q.inner_subgroup(0).expect("0 is an element");
        let mut table = std::collections::BTreeMap::new();
        for (value, seeds) in [(1u64, &ONES[..]), (2, &TWOS[..])] {
            for seed in seeds {
                for h in &stabilizer {
                    let image = seed.map(|x| h.apply(x));
                    if let Some(old) = table.insert(image, value) {
                        if old != value {
                            return Err(CocycleError::Internal(format!("{image:?} gets both {old} and {value}")));
                        }
                    }
                }
            }
        }
        let ones = table.values().filter(|&&v| v == 1).count();
        let twos = table.values().filter(|&&v| v == 2).count();
        if (ones, twos) != (20, 44) {
            return Err(CocycleError::Internal(format!("orbit expansion gave {ones} ones and {twos} twos")));
        }
        ThreeCocycle::from_values("eta", q, 3, |a, b, c| table.get(&[a, b, c]).copied().unwrap_or(0))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn value(&self, a: Elem, b: Elem, c: Elem) -> u64 {
        let n = self.quandle.size();
        self.values[(a as usize * n + b as usize) * n + c as usize]
    }

    /// A copy with one entry replaced.
    pub fn with_value(&self, triple: [Elem; 3], v: u64) -> Self {
        let mut out = self.clone();
        let n = self.quandle.size();
        let [a, b, c] = triple.map(|x| x as usize);
        out.values[(a * n + b) * n + c] = v % self.modulus;
        out
    }

    /// Non-degenerate triples with nonzero value.
    pub fn support(&self) -> Vec<([Elem; 3], u64)> {
        let q = &self.quandle;
        let mut out = Vec::new();
        for a in q.elements() {
            for b in q.elements() {
                for c in q.elements() {
                    let v = self.value(a, b, c);
                    if v != 0 {
                        out.push(([a, b, c], v));
                    }
                }
            }
        }
        out
    }

    /// Pairs an arity-3 chain with the cocycle; graded chains are projected first.
    pub fn evaluate(&self, c: &Chain) -> Result<u64, CocycleError> {
        if c.is_zero() {
            return Ok(0);
        }
        if c.arity() != 3 {
            return Err(CocycleError::InvalidParameter(format!("arity {} chain, expected 3", c.arity())));
        }
        if c.check_fits(&self.quandle).is_err() {
            return Err(CocycleError::InvalidParameter(format!("chain is not over {}", self.quandle.name())));
        }
        let m = self.modulus as i128;
        let mut acc: i128 = 0;
        for (t, k) in c.iter() {
            let v = self.value(t.colors[0], t.colors[1], t.colors[2]) as i128;
            acc = (acc + (k as i128).rem_euclid(m) * v) % m;
        }
        Ok(acc as u64)
    }

    /// Evaluates on `∂u` for every arity-4 generator `u` of the trivial X-set.
    pub fn verify_cocycle_condition(&self) -> Result<ConditionReport, CocycleError> {
        let q = &self.quandle;
        let mut report = ConditionReport { checked: 0, failures: Vec::new() };
        for a in q.elements() {
            for b in q.elements().filter(|&b| b != a) {
                for c in q.elements().filter(|&c| c != b) {
                    for d in q.elements().filter(|&d| d != c) {
                        let gen = GradedTerm::trivial(&[a, b, c, d])?;
                        let chain = Chain::from_terms(4, XSet::Trivial, [(gen, 1)])?;
                        let residue = self.evaluate(&boundary(&chain, q)?)?;
                        report.checked += 1;
                        if residue != 0 {
                            report.failures.push(([a, b, c, d], residue));
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}
