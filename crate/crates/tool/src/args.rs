use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sierpinski", version, about = "Sierpinski graphs, Hamming embeddings and Tower of Hanoi solvers")]
pub struct Cli {
    /// Regenerate every golden table and diff it against the files in DIR
    /// (defaults to the fixtures shipped with the crate).
    #[arg(long, value_name = "DIR", num_args = 0..=1, default_missing_value = crate::fixtures::DEFAULT_DIR)]
    pub check_fixtures: Option<PathBuf>,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphChoice {
    Sierpinski,
    Hamming,
    SingleTwist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapChoice {
    Phi,
    Tau,
    Epsilon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyChoice {
    Phi,
    Tau,
    Epsilon,
    Identity,
    SingleTwist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoordChoice {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GrayFormat {
    Bits,
    Int,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct Size {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: u32,
}

/// Twist multipliers for the epsilon family.
#[derive(Debug, Clone, Args)]
pub struct Twist {
    /// One multiplier used at every level.
    #[arg(long, conflicts_with = "c_list")]
    pub c: Option<u32>,
    /// Comma-separated multipliers c1,...,cn.
    #[arg(long, value_delimiter = ',')]
    pub c_list: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph on Z_m^n and serialize it.
    Gen {
        #[arg(value_enum)]
        kind: GraphChoice,
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an embedding as a vertex table or as its coefficient matrix.
    Embed {
        #[arg(value_enum)]
        kind: MapChoice,
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        twist: Twist,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        invert: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that a map (or a graph read from JSON) is a copy of S(n,m)
    /// inside K_m^n. Exits 1 on FAIL.
    Verify {
        #[arg(value_enum, required_unless_present = "graph")]
        kind: Option<VerifyChoice>,
        #[arg(long, required_unless_present = "graph")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "graph")]
        m: Option<u32>,
        #[command(flatten)]
        twist: Twist,
        /// Graph in the JSON format written by `gen --format json`.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["kind", "n", "m"])]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tower of Hanoi solutions. Disc 1 is the largest; digit i of a
    /// position is the peg of disc i.
    Hanoi {
        #[command(subcommand)]
        action: HanoiAction,
    },
    /// Move n diplomats among five capitals (the classic solution over 5 pegs).
    Diplomats {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The Gray sequence of length 2^n.
    Gray {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GrayFormat::Bits)]
        format: GrayFormat,
    },
    /// Edge counts of S(n,m) and K_m^n and their exact ratio.
    Density {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Does S(n,m) embed in K_m^n with corners on constant vertices?
    CornersSearch {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum HanoiAction {
    /// Move the whole tower from peg 0 to peg 1.
    Classic {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Optimal solution from any position to the tower on peg 0.
    Solve {
        /// Start position as a digit string, e.g. 1020.
        #[arg(long)]
        from: String,
        #[arg(long, value_enum, default_value_t = CoordChoice::T)]
        coords: CoordChoice,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}
