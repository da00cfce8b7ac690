use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact longest-cycle invariants and statement checking for small graphs.
#[derive(Debug, Parser)]
#[command(name = "cyclelab", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print invariants, longest cycles and residual profiles of graphs.
    Analyze(AnalyzeArgs),
    /// Evaluate statements on given graphs.
    Check(CheckArgs),
    /// Evaluate statements over a generated family or a graph6 file.
    Scan(ScanArgs),
    /// Sweep the two reduction identities.
    Identities(IdentitiesArgs),
    /// Print the statement catalog.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// The conclusion must hold for every longest cycle.
    Forall,
    /// The conclusion must hold for some longest cycle.
    Exists,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSourceArgs {
    /// File of graph6 lines; `-` reads standard input.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// A single graph in graph6.
    #[arg(long, value_name = "STR")]
    pub graph6: Option<String>,
    /// A named graph such as `petersen`, `cycle,7` or `complete_bipartite,3,4`.
    #[arg(long, value_name = "NAME[,ARGS]")]
    pub named: Option<String>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Wall-clock allowance per graph in milliseconds.
    #[arg(long, value_name = "N")]
    pub budget_ms: Option<u64>,
    /// Most longest cycles enumerated per graph before giving up.
    #[arg(long, value_name = "N", default_value_t = 1_000_000)]
    pub enum_cap: usize,
}

#[derive(Debug, Args)]
pub struct SelectionArgs {
    /// Statement ids, ranges (`T1-T8`), or `all`, `proved`, `open`.
    #[arg(long, value_name = "LIST", default_value = "all")]
    pub statements: String,
    /// λ values, comma separated, or `all` for the whole domain.
    #[arg(long, value_name = "N[,N...]", default_value = "all")]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = Mode::Forall)]
    pub mode: Mode,
    /// Also evaluate parametric statements at δ < λ ≤ n, reported separately.
    #[arg(long)]
    pub beyond_delta: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: GraphSourceArgs,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: GraphSourceArgs,
    #[command(flatten)]
    pub selection: SelectionArgs,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// File of graph6 lines; `-` reads standard input. Without it graphs are generated.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["n_min", "n_max", "connected", "labeled", "min_degree"])]
    pub input: Option<PathBuf>,
    /// Smallest generated order.
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub n_min: usize,
    /// Largest generated order.
    #[arg(long, value_name = "N", required_unless_present = "input")]
    pub n_max: Option<usize>,
    /// Generate connected graphs only.
    #[arg(long)]
    pub connected: bool,
    /// Generate every labeled graph instead of one per isomorphism class.
    #[arg(long)]
    pub labeled: bool,
    /// Drop generated graphs with smaller minimum degree.
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub min_degree: usize,
    #[command(flatten)]
    pub selection: SelectionArgs,
    /// Wall-clock allowance per graph in milliseconds.
    #[arg(long, value_name = "N", default_value_t = 5000)]
    pub budget_ms: u64,
    /// Most longest cycles enumerated per graph before skipping it.
    #[arg(long, value_name = "N", default_value_t = 1_000_000)]
    pub enum_cap: usize,
    /// Worker threads.
    #[arg(long, value_name = "N", env = "CYCLELAB_WORKERS")]
    pub workers: Option<usize>,
    /// Keep only confirmed rows with zero conclusion slack.
    #[arg(long)]
    pub tight_only: bool,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, value_name = "N", default_value_t = 12)]
    pub delta_max: i64,
    #[arg(long, value_name = "N", default_value_t = 60)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}
