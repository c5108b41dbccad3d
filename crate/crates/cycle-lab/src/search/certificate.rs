use std::fmt;

use super::dfs::RootRun;
use super::{describe_quandle, CaseProfile, SearchConfig};

/// What a finished (or refused) search covered.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub quandle: String,
    pub cocycle: String,
    pub modulus: u64,
    pub profile: CaseProfile,
    pub max_length: usize,
    pub budget: u64,
    pub roots: usize,
    pub term_space: usize,
    pub estimated_nodes: f64,
    pub probes: u64,
    /// Cycles met by the DFS, any value, indexed by length.
    pub cycles_by_length: [u64; 9],
    pub nonzero: usize,
}

impl Certificate {
    pub(crate) fn begin(cfg: &SearchConfig, roots: usize, term_space: usize, estimated_nodes: f64) -> Self {
        Certificate {
            quandle: describe_quandle(cfg.quandle()),
            cocycle: cfg.cocycle.name().to_string(),
            modulus: cfg.cocycle.modulus(),
            profile: cfg.profile,
            max_length: cfg.max_length,
            budget: cfg.budget,
            roots,
            term_space,
            estimated_nodes,
            probes: 0,
            cycles_by_length: [0; 9],
            nonzero: 0,
        }
    }

    pub(crate) fn absorb(&mut self, run: &RootRun) {
        self.probes += run.probes;
        for (slot, n) in self.cycles_by_length.iter_mut().zip(run.cycles_by_length) {
            *slot += n;
        }
        self.nonzero += run.nonzero.len();
    }

    pub fn scope(&self) -> String {
        let window = match self.profile.low_cap() {
            None => "all terms in one degree".to_string(),
            Some(k) => format!("terms in two adjacent degrees, at most {k} in the lower one"),
        };
        format!(
            "3-cycles over Z x {} of length <= {} with {window}; quotient by degree translation, global sign and inner automorphisms",
            self.quandle, self.max_length
        )
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# search certificate")?;
        writeln!(f, "# scope: {}", self.scope())?;
        writeln!(f, "quandle {}", self.quandle)?;
        writeln!(f, "cocycle {} mod {}", self.cocycle, self.modulus)?;
        writeln!(f, "profile {}", self.profile.label())?;
        writeln!(f, "max_length {}", self.max_length)?;
        writeln!(f, "budget {}", self.budget)?;
        writeln!(f, "roots {}", self.roots)?;
        writeln!(f, "term_space {}", self.term_space)?;
        writeln!(f, "estimated_nodes {:.0}", self.estimated_nodes)?;
        writeln!(f, "probes {}", self.probes)?;
        for (len, n) in self.cycles_by_length.iter().enumerate().filter(|(_, &n)| n > 0) {
            writeln!(f, "cycles_of_length {len} {n}")?;
        }
        write!(f, "nonzero_cycles {}", self.nonzero)
    }
}

/// A refusal: the estimate or the running count went past the budget.
#[derive(Debug, Clone, PartialEq)]
pub struct BudgetReport {
    pub partial: Certificate,
    pub covered_roots: usize,
    pub spent: u64,
}

impl BudgetReport {
    pub(crate) fn from_certificate(partial: Certificate, covered_roots: usize, spent: u64) -> Self {
        BudgetReport { partial, covered_roots, spent }
    }
}

impl fmt::Display for BudgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# search refused: budget exceeded")?;
        writeln!(
            f,
            "# estimated {:.0} nodes against a budget of {}",
            self.partial.estimated_nodes, self.partial.budget
        )?;
        writeln!(f, "covered_roots {} of {}", self.covered_roots, self.partial.roots)?;
        writeln!(f, "spent {}", self.spent)?;
        write!(f, "{}", self.partial)
    }
}
