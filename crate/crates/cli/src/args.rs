use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sympow", version, about = "Symbolic powers of homogeneous polynomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Session file declaring a ring and at least one ideal.
    pub session: Option<PathBuf>,

    /// Session text given inline instead of a file.
    #[arg(short = 'e', long = "inline", conflicts_with = "session")]
    pub inline: Option<String>,

    /// Ideal to operate on (default: the last one declared).
    #[arg(long)]
    pub ideal: Option<String>,

    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,

    /// Print one JSON document on stdout.
    #[arg(long)]
    pub json: bool,

    /// Persist Gröbner bases in this directory.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,

    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 600)]
    pub timeout: u64,

    /// Run even when the hypotheses of the formulas are not verified.
    #[arg(long)]
    pub force: bool,

    /// Treat unmixedness as known when it cannot be verified.
    #[arg(long)]
    pub assume_unmixed: bool,

    /// Treat radicality as known when it cannot be verified.
    #[arg(long)]
    pub assume_radical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Colon,
    Saturation,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I^(m) via the Fitting-ideal colon or saturation formula.
    SymbolicPower {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::Colon)]
        strategy: StrategyArg,
    },
    /// The Fitting ideal F_j(I), by default j = ht(I).
    Fitting {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Dimension, height, Hilbert numerator and multiplicity of S/I.
    Multiplicity {
        #[command(flatten)]
        common: Common,
    },
    /// Decide J = I^(m) by comparing multiplicities.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
        /// Generators of the candidate J, comma separated.
        #[arg(long, conflicts_with = "candidate_ideal", required_unless_present = "candidate_ideal")]
        candidate: Option<String>,
        /// Name of a session ideal to use as the candidate J.
        #[arg(long)]
        candidate_ideal: Option<String>,
    },
    /// mu(I^(m)/I^m) with canonical witnesses.
    Sdefect {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
    },
    /// The annihilator I^m : I^(m) of I^(m)/I^m.
    Annihilator {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
    },
    /// Check ann(I^(m)/I^m) = (x_1..x_N)^floor(m(N-2)/(N-1)).
    EmCheck {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
        /// Number of variables N (default: all of them).
        #[arg(short)]
        n: Option<usize>,
    },
    /// Lower bound m*alpha(I) - t0*alpha(F_c(I)) against the actual initial degree.
    AlphaBound {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
        /// Colon exponent t0 (default m - 1).
        #[arg(long)]
        t0: Option<u32>,
    },
    /// Compare the radical of the partial derivatives of witnesses with I.
    ConjectureCheck {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
        /// File of witness polynomials (default: the canonical sdefect witnesses).
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Height, Fitting height and the unmixed / radical checks.
    Assumptions {
        #[command(flatten)]
        common: Common,
    },
    /// I^(m) of a squarefree monomial ideal from its minimal primes.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(short)]
        m: u32,
    },
    /// Execute the commands listed in the session file.
    Run {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::SymbolicPower { common, .. }
            | Command::Fitting { common, .. }
            | Command::Multiplicity { common }
            | Command::Certify { common, .. }
            | Command::Sdefect { common, .. }
            | Command::Annihilator { common, .. }
            | Command::EmCheck { common, .. }
            | Command::AlphaBound { common, .. }
            | Command::ConjectureCheck { common, .. }
            | Command::Assumptions { common }
            | Command::Oracle { common, .. }
            | Command::Run { common } => common,
        }
    }
}
