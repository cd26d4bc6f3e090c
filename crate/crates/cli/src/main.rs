//! `hfprod`: spectra, product heatmaps, sign patterns and bound checks
//! for graph eigenvectors.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::InputArgs;

#[derive(Debug, Parser)]
#[command(name = "hfprod", version, about)]
struct Cli {
    /// Directory for written files (created if missing)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Relative tolerance applied to every check
    #[arg(long, global = true, value_name = "FLOAT")]
    tol: Option<f64>,

    /// Seed for the random generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Laplacian (or signless) spectrum as JSON
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Use D + A instead of D - A
        #[arg(long)]
        signless: bool,
        /// Include eigenvectors in the output
        #[arg(long)]
        vectors: bool,
    },
    /// Product Rayleigh-quotient heatmap (CSV + PPM)
    Heatmap {
        #[command(flatten)]
        input: InputArgs,
        /// Also report the entry for this 1-based pair
        #[arg(long, value_name = "I,J")]
        pair: Option<String>,
    },
    /// DOT sign patterns of two eigenvectors and their product
    Signs {
        #[command(flatten)]
        input: InputArgs,
        /// 1-based eigenvector indices, largest eigenvalue first
        #[arg(long, value_name = "I,J")]
        pair: String,
    },
    /// Check one of the bounds and print the reports as JSON
    Verify {
        theorem: VerifyTarget,
        #[command(flatten)]
        input: InputArgs,
        /// `all` or a 1-based pair `I,J` (thm1)
        #[arg(long, default_value = "all")]
        pairs: String,
        /// Walk half-lengths, e.g. `0..4` (thm2)
        #[arg(long, default_value = "0..4")]
        k: String,
        /// Vertices of part A for `cut` when no partition is known
        #[arg(long, value_delimiter = ',')]
        part_a: Option<Vec<usize>>,
    },
    /// Composite experiments
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Thm1,
    Thm2,
    Corollary,
    Cut,
}

#[derive(Debug, Subcommand)]
enum Demo {
    /// Sharpness of the product bound on odd cycles
    Cycle {
        #[arg(long, value_delimiter = ',', default_value = "51,101,201")]
        n: Vec<usize>,
    },
    /// Signless spectrum bottom of a nearly bipartite regular graph
    Bipartite {
        /// Part size; the graph has 2N vertices
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        d: usize,
        /// Edges placed inside the parts (even)
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Heatmap and summary statistics on G(n, p)
    Er {
        #[arg(long, default_value_t = 40)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
