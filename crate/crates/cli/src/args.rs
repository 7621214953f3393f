use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lgl", version, about = "Twisted gl(n) actions on Laurent polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generator case, dimension and highest weight of V(m,J) / W(m,J), or the structure of L(m,j) with --j.
    Classify(Common),
    /// Canonical generator of V(m,J).
    Generator(Common),
    /// Apply a word in the matrix units to x^p.
    Act(Common),
    /// Ladder certificate carrying x^p to x^q.
    Ladder(Common),
    /// Highest-weight certificate for W(m,J), or verification of one given with --input.
    Hw(Common),
    /// Window oracle sweep over n, m, J and twists.
    OracleSweep(Common),
    /// Filtration axioms and graded pieces on a window.
    FiltrationCheck(Common),
    /// Sign-region or lattice diagrams as DOT, TikZ or JSON.
    Figure(Common),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Tikz,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FigureMode {
    SignRegions,
    Lattice,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Number of variables; a comma list for oracle-sweep.
    #[arg(long)]
    pub n: Option<String>,
    /// Comma-separated twist, e.g. `1/2,i,0`. Repeatable for oracle-sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Vec<String>,
    /// Degree; `lo,hi` for oracle-sweep and filtration-check.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Index set, e.g. `1,3`; empty for the empty set.
    #[arg(long = "J", allow_hyphen_values = true)]
    pub set: Option<String>,
    /// Level of L(m,j).
    #[arg(long = "j", allow_hyphen_values = true)]
    pub level: Option<i64>,
    /// Window bound on |k_i|.
    #[arg(long = "B", allow_hyphen_values = true)]
    pub bound: Option<i64>,
    /// Source exponent.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Target exponent.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Word for `act`: `a,b;c,d` means E_ab E_cd (rightmost applied first).
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Scalar prefactor for `act`.
    #[arg(long, allow_hyphen_values = true)]
    pub prefactor: Option<String>,
    /// Figure mode.
    #[arg(long, value_enum)]
    pub mode: Option<FigureMode>,
    /// Read parameters from JSON previously emitted by the same command. Flags override.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Output format; `figure` defaults to dot, everything else to json.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}
