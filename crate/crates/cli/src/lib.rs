//! `gsym`: command-line access to every analysis in the workspace, plus the
//! acceptance corpus runner.

pub mod commands;
pub mod corpus;
pub mod graphs;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gsym_core::Error;

#[derive(Parser, Debug)]
#[command(name = "gsym", version, about = "Graph symmetry, walk measures, trees, quantum flags and Jones polynomials")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Eigenvalue clustering tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Read and print vertex labels starting at 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Series truncation order.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Named family, e.g. `k4`, `kneser:5,2`, `ade:At,8`, `prism:c5`.
    #[arg(long)]
    pub family: Option<String>,
    /// Edge-list file: an `N M` header, then `M` lines `i j`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Adjacency spectrum with multiplicities.
    Spectrum(Source),
    #[command(subcommand)]
    Measures(MeasuresCmd),
    #[command(subcommand)]
    Trees(TreesCmd),
    #[command(subcommand)]
    Sym(SymCmd),
    /// Quantum-symmetry verdict for a graph.
    Qflag {
        /// Named family.
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph")]
        file: Option<PathBuf>,
    },
    #[command(subcommand)]
    Knots(KnotsCmd),
    /// Run the acceptance corpus.
    Corpus {
        /// Criterion id (`A7`) or area (`trees`, `sym`, `knots`, ...).
        #[arg(long)]
        filter: Option<String>,
        /// Include wall-clock timings, which makes the output run-dependent.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasuresCmd {
    /// Loop counts at the root and the spectral measure.
    Loops {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        root: Option<usize>,
    },
    /// Poincare, theta and T-series of a rooted bipartite graph.
    Tseries {
        #[command(flatten)]
        source: Source,
    },
    /// Moments and a density table of a named law.
    Law {
        /// semicircle, marchenko-pastur, arcsine or modified-arcsine.
        law: String,
        #[arg(long, default_value_t = 9)]
        points: usize,
    },
    /// Circular measure of a graph with norm at most 2.
    Circular {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand, Debug)]
pub enum TreesCmd {
    /// Pruefer sequence of a tree.
    PruferEncode(Source),
    /// Tree of a whitespace-separated Pruefer sequence.
    PruferDecode {
        sequence: String,
        /// Vertex count; defaults to the sequence length plus two.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Number of labelled trees on `n` vertices.
    Count { n: usize },
    /// Spanning-tree count.
    Spanning {
        #[command(flatten)]
        source: Source,
        /// cofactor, deletion-contraction, spectral or circulant.
        #[arg(long, default_value = "cofactor")]
        method: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SymCmd {
    /// Automorphism group order and generators.
    Aut(Source),
    Orbits(Source),
    Orbitals(Source),
    /// Reproduce the group table for N <= 11.
    Table,
    /// Partial permutation and partial automorphism counts of cycles.
    Partial {
        n: usize,
    },
    /// Derangement probability and fixed-point moments of S_N.
    Characters {
        n: usize,
        #[arg(long, default_value_t = 5)]
        moments: usize,
    },
    /// Product theorem check for two families.
    Product {
        left: String,
        right: String,
        /// cartesian, direct or lex.
        #[arg(long, default_value = "cartesian")]
        kind: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum KnotsCmd {
    /// Jones polynomial of a braid closure.
    Jones {
        #[arg(long)]
        strands: usize,
        /// Signed generator indices, e.g. "1 -2 1".
        word: String,
    },
    /// Gram matrix and its determinant.
    Gram {
        /// nc2, nc or p.
        #[arg(long, default_value = "nc2")]
        basis: String,
        /// Half the point count for nc2, the point count otherwise.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: i64,
    },
    /// Determinant by the product formula next to the direct one.
    Meander {
        #[arg(long, default_value = "nc2")]
        basis: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: i64,
    },
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Why a command did not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input: exit 2.
    Usage(String),
    /// The computation refused or its contract failed: exit 1.
    Compute(Error),
    /// The command ran but reported a failure, e.g. a corpus criterion: exit 1
    /// with the report still printed.
    Reported(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => Outcome { code: 0, stdout: out, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Compute(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(Failure::Reported(out, msg)) => Outcome { code: 1, stdout: out, stderr: format!("error: {msg}\n") },
    }
}
