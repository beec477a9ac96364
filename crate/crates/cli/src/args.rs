use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sombor_core::oracle::{DEFAULT_BUDGET, VERIFY_TOLERANCE};

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Sombor index of trees with a prescribed degree sequence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Degree sequence, e.g. 4,3,3,2. Pendant 1s may be included.
    #[arg(short, long, global = true, allow_hyphen_values = true)]
    pub degrees: Option<String>,

    /// Tree file: edge list, or the JSON shape {"n": .., "edges": [[u, v], ..]}.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest number of labeled trees one enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Absolute tolerance when comparing the greedy value with the minimum.
    #[arg(long, global = true, default_value_t = VERIFY_TOLERANCE, value_parser = parse_tolerance)]
    pub tol: f64,

    /// Sweep bound on the number of vertices.
    #[arg(long, global = true, default_value_t = 9)]
    pub max_n: usize,

    /// Include the per-step swap trace.
    #[arg(long, global = true)]
    pub trace: bool,

    /// Seed for the random starting tree of `optimize -d`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Take the most improving swap each step instead of the first found.
    #[arg(long, global = true)]
    pub best: bool,

    /// Skip isomorphism-class counting in verify and sweep.
    #[arg(long, global = true)]
    pub no_classes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Build the greedy tree for a degree sequence.
    Greedy,
    /// Degree-based indices of a tree.
    Index,
    /// Improve a tree by edge swaps until the path condition holds.
    Optimize,
    /// Enumerate every labeled tree realizing a degree sequence.
    Enumerate,
    /// Check the greedy tree against exhaustive enumeration.
    Verify,
    /// Verify every degree sequence up to --max-n vertices.
    Sweep,
    /// Peel a tree back to a star and replay the index increments.
    Decompose,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Greedy => "greedy",
            Command::Index => "index",
            Command::Optimize => "optimize",
            Command::Enumerate => "enumerate",
            Command::Verify => "verify",
            Command::Sweep => "sweep",
            Command::Decompose => "decompose",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}
