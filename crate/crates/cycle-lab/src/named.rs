use std::fmt;

use chain_algebra::{boundary, parse_chain, Chain};
use cocycle_lib::ThreeCocycle;

use crate::error::CycleError;

const ZETA8: &str = include_str!("../../../fixtures/zeta8.chain");
const ETA8: &str = include_str!("../../../fixtures/eta8.chain");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedCycle {
    Zeta8,
    Eta8,
}

impl NamedCycle {
    pub fn all() -> [NamedCycle; 2] {
        [NamedCycle::Zeta8, NamedCycle::Eta8]
    }

    pub fn label(self) -> &'static str {
        match self {
            NamedCycle::Zeta8 => "zeta8",
            NamedCycle::Eta8 => "eta8",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        NamedCycle::all().into_iter().find(|n| n.label() == s)
    }

    pub fn chain(self) -> Result<Chain, CycleError> {
        let text = match self {
            NamedCycle::Zeta8 => ZETA8,
            NamedCycle::Eta8 => ETA8,
        };
        Ok(parse_chain(text)?)
    }

    pub fn cocycle(self) -> Result<ThreeCocycle, CycleError> {
        Ok(match self {
            NamedCycle::Zeta8 => ThreeCocycle::mochizuki(7)?,
            NamedCycle::Eta8 => ThreeCocycle::octahedral_eta()?,
        })
    }

    pub fn expected_value(self) -> u64 {
        match self {
            NamedCycle::Zeta8 => 6,
            NamedCycle::Eta8 => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub name: String,
    pub modulus: u64,
    pub length: u64,
    pub expected_length: u64,
    pub value: u64,
    pub expected_value: u64,
    /// `∂` of the chain; empty for a cycle.
    pub residual: Chain,
}

impl CycleReport {
    pub fn is_cycle(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn passed(&self) -> bool {
        self.is_cycle() && self.length == self.expected_length && self.value == self.expected_value
    }
}

impl fmt::Display for CycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{} {verdict}: cycle {}, length {} (expected {}), value {} mod {} (expected {})",
            self.name,
            if self.is_cycle() { "yes" } else { "no" },
            self.length,
            self.expected_length,
            self.value,
            self.modulus,
            self.expected_value
        )?;
        if !self.is_cycle() {
            write!(f, "\nresidual {:?}", self.residual)?;
        }
        Ok(())
    }
}

/// Checks an arbitrary chain against an expected length and cocycle value.
pub fn check_cycle(
    name: &str,
    c: &Chain,
    cocycle: &ThreeCocycle,
    expected_length: u64,
    expected_value: u64,
) -> Result<CycleReport, CycleError> {
    let residual = boundary(c, cocycle.quandle())?;
    let value = cocycle.evaluate(&c.project_pi())?;
    Ok(CycleReport {
        name: name.to_string(),
        modulus: cocycle.modulus(),
        length: c.length(),
        expected_length,
        value,
        expected_value,
        residual,
    })
}

pub fn verify_named_cycle(name: NamedCycle) -> Result<CycleReport, CycleError> {
    check_cycle(name.label(), &name.chain()?, &name.cocycle()?, 8, name.expected_value())
}
