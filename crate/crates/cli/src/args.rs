use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "rmub", version, about = "Construct, verify and search real mutually unbiased bases and lattice lines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bounds on the number of real MUBs for one dimension or an inclusive range `a..b`.
    Classify(ClassifyArgs),
    /// Build an artifact and write it after re-verifying it.
    Construct(ConstructArgs),
    /// Check a MUB set, line set, net, MOLS or Hadamard file.
    Verify(VerifyArgs),
    /// Exhaustive searches; prints a JSON report.
    Search(SearchArgs),
    /// Inspect the persisted Hadamard catalog.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// `d` or `a..b`.
    pub dims: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Treat every order divisible by 4 as having a Hadamard matrix.
    #[arg(long)]
    pub assume_hadamard_conjecture: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
    /// Output file; stdout when omitted.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    Hadamard {
        #[arg(long)]
        order: usize,
    },
    /// Latin MUBs in dimension `s²` from a net over `GF(s)` and a Hadamard matrix of order `s`.
    LatinMubs {
        #[arg(long)]
        dim: usize,
        /// Number of parallel classes of the net, 2 to s+1 (default s+1).
        #[arg(long)]
        classes: Option<usize>,
    },
    /// `2^i` lines in dimension `4^i s²`.
    SylvesterLines {
        #[arg(long)]
        i: u32,
        #[arg(long, default_value_t = 1)]
        s: u64,
        /// `2^i − 1` signs as a `+`/`-` string; all `+` by default.
        #[arg(long)]
        signs: Option<String>,
    },
    /// `d − √d` lines from a Hadamard matrix of order `d − √d`.
    GreedyLines {
        #[arg(long)]
        dim: usize,
    },
    Mols {
        #[arg(long)]
        q: u64,
    },
    Net {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        classes: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub path: PathBuf,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Worker threads; 0 uses all cores. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[arg(long, global = true, default_value_t = 1 << 27)]
    pub max_candidates: u64,
    #[arg(long, global = true, default_value_t = 3600.0)]
    pub max_seconds: f64,
    /// Fail with exit code 4 instead of reporting a partial result.
    #[arg(long, global = true)]
    pub exact_required: bool,
    /// Include elapsed time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(subcommand)]
    pub kind: SearchKind,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Subcommand)]
pub enum SearchKind {
    /// Look for a line unbiased to every line in a lines file.
    ExtendLines { path: PathBuf },
    /// Look for a flat vector unbiased to every basis in a MUB file.
    ExtendMub { path: PathBuf },
    MaxLines {
        #[arg(long)]
        dim: usize,
    },
    MaxOrthogonal {
        #[arg(long)]
        dim: usize,
    },
    /// Certificate that the d=4 Latin MUBs have no complex extension.
    LatinD4Complex {
        #[arg(long, default_value_t = 360)]
        grid_steps: usize,
    },
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[command(subcommand)]
    pub action: CatalogAction,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Write the catalog JSON (default stdout).
    Export {
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Print the catalog file location.
    Path,
}
