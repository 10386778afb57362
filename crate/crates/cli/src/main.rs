use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;

/// t-tone coloring toolkit: generate graphs, color them, verify colorings,
/// compute exact t-tone chromatic numbers, lower bounds and maximum average
/// degree.
#[derive(Debug, Parser)]
#[command(name = "ttone", version)]
pub struct Cli {
    /// Worker threads for verification and exact search (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph in edge-list format.
    Gen(GenArgs),
    /// Color a graph with one of the constructions; prints coloring JSON.
    Color(ColorArgs),
    /// Check a coloring against a graph; exit 1 on violations.
    Verify(VerifyArgs),
    /// Exact t-tone chromatic number by exhaustive search.
    Tau(TauArgs),
    /// Applicable lower-bound certificates, one JSON object per line.
    Bounds(BoundsArgs),
    /// Maximum average degree as an exact fraction.
    Mad(GraphInput),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Edge-list file; standard input when omitted.
    #[arg(long, short = 'g')]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true)))]
pub struct GenArgs {
    #[arg(long, group = "kind", value_name = "N")]
    pub path: Option<usize>,
    #[arg(long, group = "kind", value_name = "N")]
    pub cycle: Option<usize>,
    /// `M N`: the M × N grid.
    #[arg(long, group = "kind", num_args = 2, value_names = ["M", "N"])]
    pub grid: Option<Vec<usize>>,
    /// Star with the given number of leaves.
    #[arg(long, group = "kind", value_name = "D")]
    pub star: Option<usize>,
    /// The fat triangle H_t.
    #[arg(long, group = "kind", value_name = "T")]
    pub fat_triangle: Option<usize>,
    /// Random labelled tree.
    #[arg(long, group = "kind", value_name = "N")]
    pub tree: Option<usize>,
    /// Random maximal outerplanar graph.
    #[arg(long, group = "kind", value_name = "N")]
    pub outerplanar: Option<usize>,
    /// Random Apollonian network (stacked triangulation).
    #[arg(long, group = "kind", value_name = "N")]
    pub apollonian: Option<usize>,
    /// Random graph on N base vertices with every edge subdivided.
    #[arg(long, group = "kind", value_name = "N")]
    pub subdivided: Option<usize>,
    /// Erdős–Rényi G(N, P).
    #[arg(long, group = "kind", num_args = 2, value_names = ["N", "P"])]
    pub gnp: Option<Vec<String>>,
    /// Seed for the random generators.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Apollonian only: probability of stacking into a face at the first hub.
    #[arg(long, default_value_t = 0.0)]
    pub hub_bias: f64,
    /// Subdivided only: most subdivision vertices per edge.
    #[arg(long, default_value_t = 3)]
    pub max_subdivisions: usize,
    /// Output file; standard output when omitted.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Grid,
    FatTriangle,
    Sparse,
    Outerplanar,
    Planar,
    Auto,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, short = 't', default_value_t = 2)]
    pub t: usize,
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Coloring JSON file.
    #[arg(long, short = 'c')]
    pub coloring: PathBuf,
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    #[arg(long, short = 't')]
    pub t: usize,
    #[command(flatten)]
    pub input: GraphInput,
    /// Search-tree nodes allowed per palette size.
    #[arg(long, default_value_t = 200_000_000)]
    pub max_nodes: u64,
    /// Wall-clock limit in seconds per palette size.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Also write the witness coloring JSON here.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, short = 't')]
    pub t: u64,
    #[command(flatten)]
    pub input: GraphInput,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    match commands::run(cli.command) {
        Ok(code) => code.into(),
        Err(failure) => {
            eprintln!("ttone: {}", failure.message);
            failure.code.into()
        }
    }
}
