use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indigraph_core::gensets::DEFAULT_NODE_BUDGET;
use indigraph_core::group::DEFAULT_ORDER_CAP;
use indigraph_core::indigraph::DEFAULT_TUPLE_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "indigraph", version, about = "Independence graphs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one graph and write it as DOT or JSON.
    Graph(GraphArgs),
    /// Connectivity, planarity, clique and independence numbers, Hamiltonicity.
    Analyze(AnalyzeArgs),
    /// Run the claims suite over a catalog.
    Verify(VerifyArgs),
    /// Inspect catalogs.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Validate a Cayley-table file and summarize the group.
    Import(ImportArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// One line per entry: name, order, construction.
    List {
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Full,
    Rank,
    Swap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Catalog name, recipe (`sym4`, `direct(cyclic(2),q8)`) or `@path` to a Cayley table.
    #[arg(long)]
    pub group: String,
    /// Catalog used to resolve names: `default` or a TOML file.
    #[arg(long, default_value = "default")]
    pub catalog: String,
    #[arg(long, value_enum, default_value_t = Kind::Full)]
    pub kind: Kind,
    /// Set size for `--kind rank`; tuple length for `--kind swap` (defaults to d(G)).
    #[arg(long)]
    pub u: Option<usize>,
    /// Drop isolated vertices.
    #[arg(long)]
    pub induced: bool,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget_nodes: u64,
    #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
    pub budget_tuples: u64,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `dot` or `json`; by default taken from the `--out` extension, else dot.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Colour DOT vertices by conjugacy class.
    #[arg(long)]
    pub classes: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// `text` (default) or `json`.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = indigraph_core::analysis::DEFAULT_CLIQUE_BUDGET)]
    pub budget_clique: u64,
    #[arg(long, default_value_t = indigraph_core::analysis::DEFAULT_HAMILTON_BUDGET)]
    pub budget_hamilton: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `default` or a TOML catalog file.
    #[arg(long, default_value = "default")]
    pub catalog: String,
    /// Only these comma-separated catalog names.
    #[arg(long)]
    pub groups: Option<String>,
    #[arg(long, default_value_t = 48)]
    pub max_order: usize,
    /// Cyclic groups up to this order still run planarity-cyclic.
    #[arg(long, default_value_t = indigraph_core::verify::DEFAULT_CYCLIC_CAP)]
    pub cyclic_max_order: usize,
    /// Non-cyclic groups up to this order still run the probes.
    #[arg(long, default_value_t = 60)]
    pub probe_max_order: usize,
    /// `all` or comma-separated check names.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Report file (`-` for stdout); JSON unless `--format csv` or a `.csv` extension.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Zero all timings so reports are byte-identical across runs.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget_nodes: u64,
    #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET)]
    pub budget_tuples: u64,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ImportArgs {
    /// Cayley-table file.
    pub file: PathBuf,
    /// Write the validated table (identity first) here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget_nodes: u64,
}
