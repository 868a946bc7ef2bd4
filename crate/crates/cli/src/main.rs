//! `mwdp`: classify, solve, reduce and apply maximum weighted digraph partition instances.
//!
//! Results go to stdout as JSON; diagnostics go to stderr. Exit codes: 0 on
//! success, 2 for unreadable or invalid input, 3 when exhaustive search is
//! over the cap, 1 when an internal cross-check fails.

mod commands;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mwdp_core::DEFAULT_BRUTE_FORCE_CAP;

#[derive(Debug, Parser)]
#[command(name = "mwdp", version, about = "Exact maximum weighted digraph partition toolkit")]
pub struct Cli {
    /// Largest vertex count exhaustive search will attempt.
    #[arg(long, global = true, env = "MWDP_CAP", default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    pub cap: usize,

    /// Worker threads for exhaustive search (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report which polynomial branch, if any, the instance's matrix family falls into.
    Classify(InputArgs),
    /// Compute an optimal partition.
    Solve(SolveArgs),
    /// Build reduction instances.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Solve application problems through partition instances.
    #[command(subcommand)]
    App(AppCommand),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input JSON file.
    #[arg(short, long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Mincut,
    TrivialB,
    TrivialC,
    #[value(alias = "brute-force")]
    Brute,
    /// 1-flip local search; not guaranteed optimal.
    #[value(alias = "local-search")]
    Local,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance JSON file.
    #[arg(short, long)]
    pub input: PathBuf,
    /// Solver; `auto` picks the exact solver for the family's case.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Seed for local search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Local search restarts.
    #[arg(long, default_value_t = 16)]
    pub restarts: usize,
    /// Also write the min-cut graph (weights before and after the shift) to this file.
    #[arg(long)]
    pub emit_cutgraph: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Hypergraph 2-coloring to a single-matrix oriented instance.
    Hyp2col {
        #[arg(short, long)]
        input: PathBuf,
        /// Matrix as JSON, e.g. '[[0,1],[1,0]]'.
        #[arg(long)]
        matrix: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Max-cut to an oriented instance over M with (b) only and R with (c) but not (b).
    MaxcutBc(MaxcutArgs),
    /// Max-cut to an oriented instance over M with (b) only and R with (a) only.
    MaxcutBa(MaxcutArgs),
    /// Oriented instance to a symmetric one with zero-cost opposite arcs.
    Symmetrize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace a 3-uniform hypergraph by an equally 2-colorable linear one.
    Linearize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Read the max-cut size off an optimum of a max-cut reduction instance.
    RecoverMaxcut {
        /// Report JSON written by maxcut-bc or maxcut-ba.
        #[arg(long)]
        report: PathBuf,
        /// Optimal weight of the emitted instance.
        #[arg(long)]
        weight: String,
        /// Number of edges in the source graph.
        #[arg(long)]
        edges: usize,
    },
}

#[derive(Debug, Args)]
pub struct MaxcutArgs {
    /// Undirected graph JSON file.
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long)]
    pub m: String,
    #[arg(long)]
    pub r: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Also solve the emitted instance and recover the max-cut size.
    #[arg(long)]
    pub solve: bool,
}

#[derive(Debug, Subcommand)]
pub enum AppCommand {
    /// Welfare-maximizing pure profile of a binary-action polymatrix game.
    Game(InputArgs),
    /// Maximum average degree, or whether it exceeds --k.
    Mad {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        k: Option<String>,
    },
    /// Partition maximizing color-1 edges in X1 plus color-2 edges in X2.
    Colorpart(InputArgs),
    /// Vertex set maximizing color-2 minus color-1 edge weight inside it.
    Colordiff(InputArgs),
    /// Balance defect of an arc-weighted digraph.
    Balance(InputArgs),
    /// Minimum (s,t)-cut in arcs.
    Stcut {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
    },
    /// Maximum weighted directed cut.
    Dicut(InputArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("mwdp: cannot configure {n} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(value) => {
            let mut stdout = io::stdout().lock();
            match writeln!(stdout, "{}", output::pretty(&value)) {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("mwdp: cannot write output: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(failure) => {
            eprintln!("mwdp {}: {}", failure.context, failure.message);
            ExitCode::from(failure.code)
        }
    }
}
