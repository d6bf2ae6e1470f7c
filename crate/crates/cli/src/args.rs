use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tamari", version, about = "m-Tamari lattices, labelled intervals and their generating series")]
pub struct Cli {
    /// Directory for cached results; caching is off when unset
    #[arg(long, global = true, env = "TAMARI_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Maximum number of poset vertices
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,

    /// Output format (each command accepts a subset)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Text => "text",
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct MArg {
    /// Path parameter m
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hasse diagram of the m-Tamari lattice of size n (default format: dot)
    Lattice {
        #[command(flatten)]
        m: MArg,
        #[arg(long)]
        n: usize,
    },
    /// Interval counts and refined polynomials for sizes 0..=n (default format: text)
    Intervals {
        #[command(flatten)]
        m: MArg,
        #[arg(long)]
        n: usize,
        /// Also record the Tamari distance as q
        #[arg(long)]
        with_q: bool,
        /// List the intervals of size n with their statistics
        #[arg(long)]
        list: bool,
    },
    /// Truncated generating series from the functional equation (default format: json)
    Series {
        #[command(flatten)]
        m: MArg,
        /// Truncation order N
        #[arg(long)]
        order: usize,
        #[arg(long)]
        with_q: bool,
        /// Change variables to z and u
        #[arg(long, conflicts_with = "with_q")]
        z: bool,
        /// Set y = 1
        #[arg(long)]
        y_one: bool,
    },
    /// Run named verification checks (default format: json)
    Verify {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Poset size for the combinatorial checks
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Series order N for the algebraic checks
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Check to run (repeatable)
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        /// Run every check that applies at this m
        #[arg(long, conflicts_with = "checks")]
        all: bool,
    },
    /// Convert between labelled paths and (1,m,...,m)-parking functions (default format: json)
    Bijection {
        #[command(flatten)]
        m: MArg,
        /// Labelled path such as N1EN2E
        #[arg(long, conflicts_with = "parking", required_unless_present = "parking")]
        labelled: Option<String>,
        /// Parking function values f(1),...,f(n), comma separated
        #[arg(long)]
        parking: Option<String>,
    },
}
