//! `evcyc`: even-cycle decompositions from the command line.
//!
//! Exit codes: 0 ok, 1 negative verdict, 2 precondition, 3 parse,
//! 4 internal, 5 bounds.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "evcyc", version, about = "Even-cycle decompositions of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for generated recipes and signatures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Oracle edge bound.
    #[arg(long, global = true, env = "EVCYC_MAX_EDGES", default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    max_edges: u64,

    /// Oracle cycle-space dimension bound.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    max_dim: u64,

    /// Worker threads for classify and fuzz.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a recipe's graph under a signature.
    Decompose {
        #[arg(long)]
        recipe: PathBuf,
        /// JSON array of odd edge ids. Without it the signature is drawn from --seed.
        #[arg(long)]
        signature: Option<PathBuf>,
        /// Also write the signed realized graph here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Check a certificate against a signed graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Decide decomposability of a small signed graph by exhaustive search.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Sweep every even signature class of a small Eulerian graph.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decompose random recipes under random signatures.
    Fuzz {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Largest realized edge count.
        #[arg(long, default_value_t = 16)]
        budget: usize,
        /// Signatures per recipe.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        signatures: u64,
        /// Cross-check with the oracle up to this many edges.
        #[arg(long, default_value_t = 16)]
        oracle_edges: usize,
    },
    /// Subdivide a graph's edges and report the induced signature.
    Subdivide {
        #[arg(long)]
        graph: PathBuf,
        /// JSON object from edge id to path length.
        #[arg(long)]
        profile: PathBuf,
        /// Certificate on the induced signed graph, lifted to the subdivision.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("evcyc: {message}");
            ExitCode::from(code)
        }
    }
}
