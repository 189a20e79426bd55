//! `morphic`: batch front end for deciding and cross-checking when a group
//! ring is a principal ideal ring.

mod corpus;
mod report;
mod run;

use std::process::ExitCode;

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Run the decision procedure on `RG`.
    Decide,
    /// Exhaustive principal-ideal and morphic scans.
    Oracle,
    /// Decision procedure and oracle side by side.
    Compare,
    /// Jacobson radical.
    Radical,
    /// Centrally primitive idempotents.
    Idempotents,
    /// Morphic scan, or a single element with `--element`.
    Morphic,
    /// `D_1, …, D_n` of `RG`.
    DimensionSubgroups,
    /// Ideal scan, morphic scan and block decomposition, all compared.
    Princrings,
    /// The built-in corpus of rings and groups.
    Corpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "morphic", version, about)]
pub struct Args {
    /// Mode to run; may also be given with `--mode`.
    #[arg(value_enum)]
    pub command: Option<Mode>,

    #[arg(long = "mode", value_enum)]
    pub mode_flag: Option<Mode>,

    /// Ring spec, e.g. `SkewTrunc(GF(2,2),frob^1,2)`.
    #[arg(long)]
    pub ring: Option<String>,

    /// Group spec such as `Cyclic(3)`, or a corpus group name such as `Q8`.
    #[arg(long)]
    pub group: Option<String>,

    /// Largest carrier the exhaustive scans accept.
    #[arg(long, default_value_t = 4096)]
    pub cap: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the sampled axiom check on rings above 256 elements.
    #[arg(long, default_value_t = 0x6d6f72)]
    pub seed: u64,

    /// Random triples for the sampled axiom check.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,

    /// Worker threads for corpus runs.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,

    /// Element literal for `morphic`, e.g. `1 + g^1`.
    #[arg(long)]
    pub element: Option<String>,

    /// Largest `n` for `dimension-subgroups`.
    #[arg(long, default_value_t = 4)]
    pub depth: u32,

    /// Corpus filter: comma-separated substrings of ring spec or group name,
    /// or `semisimple`; a pair is kept when every term matches.
    #[arg(long)]
    pub filter: Option<String>,

    /// Corpus: also list pairs beyond `--cap` (decided, oracle refused).
    #[arg(long)]
    pub run_all: bool,
}

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Disagreement = 2,
    Refused = 3,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Status::Usage as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (status, out) = run::run(&args);
    print!("{out}");
    ExitCode::from(status as u8)
}
