//! Bounded search for short 3-cycles over `Z x X` pairing nontrivially with
//! a cocycle.
//!
//! The primary engine grows a signed multiset from a root term and always
//! branches on the residual face with the fewest possible cancellers. Roots
//! are the minimal term of the cycle: degree 0, index 0, positive sign and
//! minimal in its orbit under the stabilizer of 0 in the inner group.
//! A second, independent engine joins instantiated f-connected families by
//! their g-images; it covers single-degree cycles up to length 5.

mod certificate;
mod dfs;
mod join;
mod space;

use std::sync::atomic::{AtomicBool, AtomicU64};

use chain_algebra::{is_cycle, Chain, GradedTerm, XSet};
use cocycle_lib::ThreeCocycle;
use quandle_core::FiniteQuandle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::CycleError;
pub use certificate::{BudgetReport, Certificate};
use dfs::{Limits, Multiset, RootRun, Walker};
pub use join::{canonical_form, is_primitive, join_single_degree, CanonicalCycle, JoinReport};
use space::TermSpace;

pub const MAX_SEARCH_LENGTH: usize = 8;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
const SAMPLES_PER_ROOT: usize = 64;

/// Degree layout of the cycles searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeWindow {
    Single,
    TwoAdjacent,
}

/// Which terms may sit in the lowest degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseProfile {
    /// All terms share one degree.
    A,
    /// Two adjacent degrees, at most two terms in the lower one.
    B,
    /// Two adjacent degrees, at most three terms in the lower one.
    C,
}

impl CaseProfile {
    pub fn window(self) -> DegreeWindow {
        match self {
            CaseProfile::A => DegreeWindow::Single,
            _ => DegreeWindow::TwoAdjacent,
        }
    }

    pub fn low_cap(self) -> Option<usize> {
        match self {
            CaseProfile::A => None,
            CaseProfile::B => Some(2),
            CaseProfile::C => Some(3),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseProfile::A => "A",
            CaseProfile::B => "B",
            CaseProfile::C => "C",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(CaseProfile::A),
            "B" => Some(CaseProfile::B),
            "C" => Some(CaseProfile::C),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub cocycle: ThreeCocycle,
    pub max_length: usize,
    pub profile: CaseProfile,
    /// Hard cap on DFS nodes, checked against the estimate and while running.
    pub budget: u64,
    pub stop_at_first: bool,
    /// Worker threads; 0 leaves the choice to rayon.
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(cocycle: ThreeCocycle, profile: CaseProfile, max_length: usize) -> Self {
        SearchConfig { cocycle, max_length, profile, budget: DEFAULT_BUDGET, stop_at_first: false, threads: 0 }
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        self.cocycle.quandle()
    }

    pub fn validate(&self) -> Result<(), CycleError> {
        if self.max_length == 0 || self.max_length > MAX_SEARCH_LENGTH {
            return Err(CycleError::InvalidParameter(format!(
                "max_length must lie in 1..={MAX_SEARCH_LENGTH}, got {}",
                self.max_length
            )));
        }
        if self.budget == 0 {
            return Err(CycleError::InvalidParameter("budget must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundCycle {
    pub chain: Chain,
    pub value: u64,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found { cycles: Vec<FoundCycle>, certificate: Certificate },
    Exhausted(Certificate),
    Refused(BudgetReport),
}

/// Degree-0, index-0 terms minimal in their orbit under the stabilizer of 0.
pub fn root_terms(q: &FiniteQuandle) -> Vec<GradedTerm> {
    let stab: Vec<_> = q.inner_group().into_iter().filter(|g| g.apply(0) == 0).collect();
    let mut roots = Vec::new();
    for a in q.elements() {
        for b in q.elements().filter(|&b| b != a) {
            for c in q.elements().filter(|&c| c != b) {
                let t = [a, b, c];
                if stab.iter().all(|g| t.map(|x| g.apply(x)) >= t) {
                    roots.push(GradedTerm::new_unchecked(0, 0, &t));
                }
            }
        }
    }
    roots
}

struct Prepared {
    space: TermSpace,
    weights: Vec<u64>,
    roots: Vec<u32>,
}

fn prepare(cfg: &SearchConfig) -> Prepared {
    let q = cfg.quandle();
    let levels = match cfg.profile.window() {
        DegreeWindow::Single => 1,
        DegreeWindow::TwoAdjacent => 2,
    };
    let space = TermSpace::new(q, levels);
    let weights = space.colors.iter().map(|c| cfg.cocycle.value(c[0], c[1], c[2])).collect();
    let roots = root_terms(q)
        .iter()
        .map(|t| space.id(0, 0, [t.colors[0], t.colors[1], t.colors[2]]))
        .collect();
    Prepared { space, weights, roots }
}

fn to_chain(space: &TermSpace, m: &Multiset) -> Chain {
    let mut c = Chain::zero(3, XSet::Graded);
    for &(t, s) in m {
        c.add_term(space.terms[t as usize].clone(), s as i64).expect("arity 3 graded terms");
    }
    c
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, CycleError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CycleError::InvalidParameter(format!("thread pool: {e}")))
}

/// Knuth's random-walk estimate of the total number of DFS nodes.
pub fn estimate_nodes(cfg: &SearchConfig) -> Result<f64, CycleError> {
    cfg.validate()?;
    let prep = prepare(cfg);
    Ok(estimate(cfg, &prep))
}

fn estimate(cfg: &SearchConfig, prep: &Prepared) -> f64 {
    let spent = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let limits = limits(cfg, &spent, &stop, false);
    prep.roots
        .iter()
        .map(|&r| {
            let mut rng = ChaCha8Rng::seed_from_u64(r as u64);
            let mut w = Walker::new(&prep.space, &prep.weights, cfg.cocycle.modulus(), r, &limits);
            let sum: f64 = (0..SAMPLES_PER_ROOT).map(|_| w.sample(&mut rng)).sum();
            sum / SAMPLES_PER_ROOT as f64
        })
        .sum()
}

fn limits<'a>(cfg: &SearchConfig, spent: &'a AtomicU64, stop: &'a AtomicBool, collect_all: bool) -> Limits<'a> {
    Limits {
        max_len: cfg.max_length,
        low_cap: cfg.profile.low_cap(),
        budget: cfg.budget,
        spent,
        stop,
        stop_at_first: cfg.stop_at_first,
        collect_all,
    }
}

fn run_roots(cfg: &SearchConfig, prep: &Prepared, collect_all: bool) -> Result<Vec<RootRun>, CycleError> {
    let spent = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let limits = limits(cfg, &spent, &stop, collect_all);
    let work = |&r: &u32| {
        let mut w = Walker::new(&prep.space, &prep.weights, cfg.cocycle.modulus(), r, &limits);
        w.search();
        w.run
    };
    // a single worker visits roots in order so that the first hit is deterministic
    if cfg.threads == 1 {
        let mut out = Vec::new();
        for r in &prep.roots {
            let run = work(r);
            let halt = run.aborted || (cfg.stop_at_first && !run.nonzero.is_empty());
            out.push(run);
            if halt {
                break;
            }
        }
        return Ok(out);
    }
    Ok(pool(cfg.threads)?.install(|| prep.roots.par_iter().map(work).collect()))
}

/// Runs the configured search. Every reported cycle is re-checked with the
/// chain-level boundary and evaluated through the cocycle.
pub fn search_min_cycles(cfg: &SearchConfig) -> Result<SearchOutcome, CycleError> {
    cfg.validate()?;
    let prep = prepare(cfg);
    let estimate = estimate(cfg, &prep);
    let mut cert = Certificate::begin(cfg, prep.roots.len(), prep.space.len(), estimate);
    if estimate > cfg.budget as f64 {
        return Ok(SearchOutcome::Refused(BudgetReport::from_certificate(cert, 0, 0)));
    }
    let runs = run_roots(cfg, &prep, false)?;
    let q = cfg.quandle();
    let mut cycles = Vec::new();
    let mut covered = 0;
    let mut aborted = false;
    for run in &runs {
        cert.absorb(run);
        aborted |= run.aborted;
        if !run.aborted {
            covered += 1;
        }
        for m in &run.nonzero {
            let chain = to_chain(&prep.space, m);
            if !is_cycle(&chain, q)? {
                return Err(CycleError::InvalidParameter(format!("search produced a non-cycle {chain:?}")));
            }
            let value = cfg.cocycle.evaluate(&chain.project_pi())?;
            if value == 0 {
                return Err(CycleError::InvalidParameter(format!("cycle {chain:?} evaluates to 0")));
            }
            cycles.push(FoundCycle { chain, value });
        }
    }
    if aborted {
        let spent = cert.probes;
        return Ok(SearchOutcome::Refused(BudgetReport::from_certificate(cert, covered, spent)));
    }
    cycles.sort_by(|a, b| a.chain.length().cmp(&b.chain.length()).then_with(|| term_list(&a.chain).cmp(&term_list(&b.chain))));
    if cycles.is_empty() {
        Ok(SearchOutcome::Exhausted(cert))
    } else {
        if cfg.stop_at_first {
            cycles.truncate(1);
        }
        Ok(SearchOutcome::Found { cycles, certificate: cert })
    }
}

fn term_list(c: &Chain) -> Vec<(GradedTerm, i64)> {
    c.iter().map(|(t, k)| (t.clone(), k)).collect()
}

/// Every single-degree cycle the DFS meets up to `max_length`, as chains,
/// regardless of value. Used to compare against the join engine.
pub fn dfs_single_degree_cycles(q: &FiniteQuandle, cocycle: &ThreeCocycle, max_length: usize) -> Result<Vec<Chain>, CycleError> {
    if cocycle.quandle().rows() != q.rows() {
        return Err(CycleError::InvalidParameter("cocycle is over a different quandle".into()));
    }
    let mut cfg = SearchConfig::new(cocycle.clone(), CaseProfile::A, max_length);
    cfg.threads = 1;
    cfg.validate()?;
    let prep = prepare(&cfg);
    let runs = run_roots(&cfg, &prep, true)?;
    Ok(runs.iter().flat_map(|r| r.all.iter().map(|m| to_chain(&prep.space, m))).collect())
}

pub(crate) fn describe_quandle(q: &FiniteQuandle) -> String {
    format!("{} (order {})", q.name(), q.size())
}
