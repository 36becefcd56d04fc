use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "leapfrog", version, about = "Hamilton cycles of leapfrog fullerenes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print a line per graph to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct and verify at least 2^k Hamilton cycles of each leapfrog.
    Certify(CertifyArgs),
    /// Write the leapfrog of each fullerene with its correspondence tables.
    Leapfrog(IoArgs),
    /// Brute-force counts for small instances.
    Oracle(OracleArgs),
    /// Export graphs, decompositions or cycles as JSON or DOT.
    Export(ExportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct IoArgs {
    /// Input file: planar_code, or JSON maps `{"n", "adj"}`.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Output file (default: stdout).
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads for per-graph parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub io: IoArgs,
    /// Initial hexagon of the face search (face id).
    #[arg(long, requires = "seed_pentagon")]
    pub seed_hexagon: Option<u32>,
    /// Second face of the face search, a pentagon next to the seed hexagon.
    #[arg(long, requires = "seed_hexagon")]
    pub seed_pentagon: Option<u32>,
    /// Keep the whole decomposition tree and report its size.
    #[arg(long)]
    pub materialize_tree: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Hamilton,
    Decompositions,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    All,
    Proper,
    Improper,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long, value_enum, default_value_t = OracleMode::Hamilton)]
    pub mode: OracleMode,
    /// Run on the leapfrog of each input graph instead of the graph itself.
    #[arg(long)]
    pub leapfrog: bool,
    /// Stop a Hamilton search after this many cycles.
    #[arg(long, default_value_t = leapfrog_core::oracle::DEFAULT_CYCLE_CAP)]
    pub cap_cycles: u64,
    /// Wall-clock budget per instance.
    #[arg(long, default_value_t = 600_000)]
    pub time_budget_ms: u64,
    /// Largest graph the decomposition search accepts.
    #[arg(long, default_value_t = leapfrog_core::oracle::DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Decomposition kinds to count.
    #[arg(long, value_enum, default_value_t = KindArg::All)]
    pub kind: KindArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportWhat {
    /// The input graph.
    Graph,
    /// Its leapfrog.
    Leapfrog,
    /// Decompositions found by the enumerator.
    Decomposition,
    /// Hamilton cycles of the leapfrog built from them.
    Cycle,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = ExportWhat::Graph)]
    pub what: ExportWhat,
    /// Export only the decomposition or cycle with this index.
    #[arg(long)]
    pub index: Option<usize>,
}
