//! Command-line front end for `insdel-core`.
//!
//! [`Cli`] is the argument grammar and [`run`] executes a parsed command,
//! returning the text that goes to standard output (or to `--out`).

pub mod commands;
pub mod error;
pub mod format;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "insdel", version, about = "Insertion/deletion code combinatorics, bounds and list decoding")]
pub struct Cli {
    /// Alphabet size.
    #[arg(short = 'q', long = "q", global = true, default_value_t = 2)]
    pub q: u32,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SphereKind {
    Insertion,
    Deletion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BallModeArg {
    Oracle,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CurveKind {
    Singleton,
    Gv,
    RandomQ3,
    RandomBinary,
    Zyablov,
    InsertionOnly,
    DeletionOnly,
    LargeQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pattern {
    /// Edits spread one at a time over random blocks.
    Spread,
    /// Edits packed into as few consecutive blocks as possible.
    Concentrated,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insdel distance between two words.
    Distance { a: String, b: String },
    /// Run count, Hamming weight and empty zero blocks of a word.
    Runs { word: String },
    /// Size (or members) of an insertion or deletion sphere.
    Sphere {
        word: String,
        #[arg(long, value_enum)]
        kind: SphereKind,
        /// Number of insertions or deletions.
        #[arg(long)]
        n2: usize,
        /// Print the members instead of the size.
        #[arg(long)]
        list: bool,
    },
    /// Words of a fixed length within an insdel radius, with the bound.
    Ball {
        word: String,
        #[arg(long)]
        radius: usize,
        /// Length of the counted words (defaults to the center's length).
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, value_enum, default_value = "fast")]
        mode: BallModeArg,
        #[arg(long)]
        list: bool,
    },
    /// Rate curve as CSV.
    Curve {
        #[arg(long, value_enum)]
        kind: CurveKind,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        #[arg(long)]
        start: f64,
        #[arg(long)]
        stop: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Greedy code with minimum distance at least `d`, as JSON.
    GvGreedy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Random (or random linear) code, as JSON.
    Sample {
        #[arg(long)]
        n: usize,
        /// Number of codewords.
        #[arg(long, required_unless_present = "linear")]
        size: Option<usize>,
        /// Sample a linear code of this dimension instead.
        #[arg(long, conflicts_with = "size")]
        linear: Option<usize>,
        /// Print only the digest of the sampled code.
        #[arg(long)]
        digest: bool,
    },
    /// Digest of a code file.
    Digest { code: PathBuf },
    /// Rate, minimum distance and relative distance of a code file.
    Stats { code: PathBuf },
    /// List-decodability check of a code file.
    Certify {
        code: PathBuf,
        #[arg(long)]
        tau_n: usize,
        /// List size bound `L`.
        #[arg(long = "list-size")]
        list_size: usize,
        /// Check this many sampled centers instead of all of them.
        #[arg(long)]
        sampled: Option<u64>,
    },
    /// Random insertions and deletions, or replay of a script file.
    Channel {
        word: String,
        #[arg(long, default_value_t = 0)]
        ins: usize,
        #[arg(long, default_value_t = 0)]
        del: usize,
        /// Apply this JSON script instead of random edits.
        #[arg(long, conflicts_with_all = ["ins", "del"])]
        script: Option<PathBuf>,
    },
    /// Encode an outer message with a concatenated code.
    ConcatEncode {
        #[arg(long)]
        params: PathBuf,
        /// Comma-separated outer message symbols.
        #[arg(long)]
        message: String,
    },
    /// List decode a received word with a concatenated code.
    ConcatDecode {
        #[arg(long)]
        params: PathBuf,
        word: String,
    },
    /// Encode a random message, corrupt it, decode and report containment.
    ConcatRoundtrip {
        #[arg(long)]
        params: PathBuf,
        /// Number of edits (defaults to the guaranteed budget).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "spread")]
        pattern: Pattern,
    },
    /// Monte Carlo list-decodability experiment on random codes.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Sampled centers per trial.
        #[arg(long, default_value_t = 1000)]
        centers: u64,
    },
}

pub fn run(cli: &Cli) -> CliResult<String> {
    commands::dispatch(cli)
}

/// Runs `cli` and delivers its output; returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let result = run(cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
