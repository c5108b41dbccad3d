use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qlab", version, about = "Quandle chains, cocycles and short cycle searches")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for searches; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Operation tables and their properties.
    Quandle(QuandleArgs),
    /// 3-cocycles.
    Cocycle {
        #[command(subcommand)]
        action: CocycleAction,
    },
    /// f-connected families and index-pattern tables.
    Enumerate {
        #[command(subcommand)]
        action: EnumerateAction,
    },
    /// Kernel of f and g on one slice of generators.
    Kernel(KernelArgs),
    /// Bounded search for short cycles with nonzero pairing.
    Search(SearchArgs),
    /// Explicit cycles and boundary identities.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Weight sum over colored triple points.
    Weight(WeightArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Dihedral,
    Octahedral,
}

#[derive(Debug, Args)]
pub struct QuandleSource {
    /// Built-in family.
    #[arg(long, value_enum, conflicts_with = "table")]
    pub family: Option<FamilyName>,
    /// Order of the dihedral quandle.
    #[arg(long)]
    pub n: Option<usize>,
    /// Table file: the order, then one row per line.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QuandleArgs {
    #[command(flatten)]
    pub source: QuandleSource,
    #[command(subcommand)]
    pub action: QuandleAction,
}

#[derive(Debug, Subcommand)]
pub enum QuandleAction {
    PrintTable,
    /// Exhaustive Q1-Q3 check.
    Check,
    /// Prints the dual table and checks a map onto it.
    Dual {
        /// Comma-separated images; defaults to the label swap 2 <-> 5 on O6.
        #[arg(long)]
        map: Option<String>,
    },
    /// `base^{a b c}` for every triple with `b != a, c`.
    Table1 {
        #[arg(long, default_value_t = 0)]
        base: u8,
        /// Golden file to compare against.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CocycleName {
    Mochizuki,
    Zeta,
    Eta,
}

#[derive(Debug, Args)]
pub struct CocycleSel {
    #[arg(long, value_enum)]
    pub name: CocycleName,
    /// Odd prime for the Mochizuki cocycle.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum CocycleAction {
    /// Checks that the cocycle kills every arity-4 boundary.
    Verify(CocycleSel),
    /// Pairs the cocycle with a chain file; graded chains are projected first.
    Eval {
        #[command(flatten)]
        cocycle: CocycleSel,
        chain: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateAction {
    /// Canonical f-connected templates of one size.
    Families {
        #[arg(long)]
        k: usize,
    },
    /// Index-pattern rows over O6 for families of size 4 or 5.
    IndexTables {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        compare: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[command(flatten)]
    pub source: QuandleSource,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub degree: i32,
    /// An element, or `all`.
    #[arg(long, default_value = "0")]
    pub index: String,
    /// Keep generators whose terminal index is this element.
    #[arg(long)]
    pub terminal: Option<u8>,
    #[arg(long, value_enum, default_value_t = BasisKind::Lattice)]
    pub basis: BasisKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    /// Hermite normal form of all integer kernel vectors.
    Lattice,
    /// One primitive vector per free column.
    Rational,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub cocycle: CocycleSel,
    #[arg(long)]
    pub max_length: usize,
    /// A: one degree. B, C: two adjacent degrees with at most 2 or 3 low terms.
    #[arg(long, default_value = "A")]
    pub profile: String,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub stop_at_first: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyAction {
    /// Named cycles, or a chain file against an expected length and value.
    Cycles {
        /// zeta8, eta8; all when empty.
        names: Vec<String>,
        #[arg(long, requires_all = ["name", "length", "value"])]
        chain: Option<PathBuf>,
        #[command(flatten)]
        cocycle: OptionalCocycle,
        #[arg(long)]
        length: Option<u64>,
        #[arg(long)]
        value: Option<u64>,
    },
    /// The catalogued `γ = ±∂(4-term)` identities.
    Boundary {
        /// Only identities whose name starts with this prefix.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct OptionalCocycle {
    #[arg(long, value_enum)]
    pub name: Option<CocycleName>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_enum)]
    pub cocycle: CocycleName,
    #[arg(long)]
    pub n: Option<usize>,
    /// Must agree with the cocycle's modulus when given.
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Fail unless the weight equals this value.
    #[arg(long)]
    pub expect: Option<u64>,
    pub points: PathBuf,
}
