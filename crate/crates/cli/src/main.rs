mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use terwilliger::DEFAULT_D_LIMIT;

/// Exact verification of the Leonard triples acting on the irreducible
/// modules of the hypercube Terwilliger algebra.
#[derive(Parser, Debug)]
#[command(name = "terwilliger", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Hypercube dimension D.
    #[arg(long = "d", value_name = "D")]
    pub d: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Largest accepted D.
    #[arg(long, env = "TERWILLIGER_D_LIMIT", default_value_t = DEFAULT_D_LIMIT)]
    pub d_limit: usize,
    /// Use all available cores.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpArg {
    #[value(alias = "A")]
    Adjacency,
    #[value(alias = "Astar")]
    Dual,
    #[value(alias = "Aeps")]
    Imaginary,
    #[value(name = "P")]
    P,
    #[value(name = "Pinv")]
    PInv,
    /// Distance matrix `A_i` (needs --index).
    Distance,
    /// Primitive idempotent `E_i` (needs --index).
    E,
    /// Dual idempotent `E*_i` (needs --index).
    Estar,
    /// Imaginary idempotent `Eε_i` (needs --index).
    Eeps,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Commutators,
    Idempotents,
    Conjugation,
    RepMatrices,
    InnerProducts,
    Transitions,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an operator in the sparse matrix dump format.
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = OpArg::Adjacency)]
        op: OpArg,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Run a verification suite; exits 1 if any identity fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, hide = true, value_parser = parse_pair)]
        corrupt_aeps: Option<(usize, usize)>,
        #[arg(long, hide = true, value_parser = parse_pair)]
        corrupt_phi: Option<(usize, usize)>,
    },
    /// Split the standard module into irreducible modules.
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Directory receiving one seed-vector file per module (default `seeds`).
        #[arg(long, value_name = "DIR", num_args = 0..=1, default_missing_value = "seeds")]
        emit_seeds: Option<PathBuf>,
    },
    /// Full verification report for each irreducible module.
    ModuleReport {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Run the Leonard-triple recognizer on every module, or on three
    /// matrices read from a JSON array of matrix dumps.
    LeonardCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected ROW,COL")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

/// Why a command did not succeed; each maps to a fixed exit status.
#[derive(Debug)]
pub enum Failure {
    Verification,
    Usage(String),
    Io(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification | Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<terwilliger::Error> for Failure {
    fn from(e: terwilliger::Error) -> Self {
        match e {
            terwilliger::Error::DimensionOutOfRange { .. } | terwilliger::Error::ArgumentOutOfRange(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Build { common, .. }
        | Command::Verify { common, .. }
        | Command::Decompose { common, .. }
        | Command::ModuleReport { common, .. }
        | Command::LeonardCheck { common, .. } => common.clone(),
    };
    if !common.parallel {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    let result = match cli.command {
        Command::Build { common, op, index } => commands::build(&common, op, index),
        Command::Verify {
            common,
            suite,
            corrupt_aeps,
            corrupt_phi,
        } => commands::verify(&common, suite, corrupt_aeps, corrupt_phi),
        Command::Decompose { common, emit_seeds } => commands::decompose(&common, emit_seeds.as_deref()),
        Command::ModuleReport { common, r, index } => commands::module_report(&common, r, index),
        Command::LeonardCheck { common, input } => commands::leonard_check(&common, input.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification => eprintln!("verification failed"),
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Io(m) => eprintln!("I/O error: {m}"),
                Failure::Internal(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
