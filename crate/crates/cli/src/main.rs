mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cce_core::AlgebraType;

#[derive(Parser)]
#[command(name = "cce", version, about = "Cartan commutants of classical Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, simple roots, Cartan matrix and weights.
    Roots(TypeArgs),
    /// Indecomposable zero-weight generators, layer by layer.
    Generators {
        #[command(flatten)]
        ty: TypeArgs,
        /// Compare the layer counts with the embedded reference tables.
        #[arg(long)]
        compare_paper: bool,
    },
    /// Bracket closure of the catalog, degree report and Jacobi check.
    Close {
        #[command(flatten)]
        ty: TypeArgs,
        /// Dump every nonzero bracket.
        #[arg(long)]
        full: bool,
        /// Random Jacobi triples when the exhaustive check is too large.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Superintegrability certificate for a quadratic Cartan Hamiltonian.
    Certify(TypeArgs),
    /// Symmetrize the catalog and run the enveloping-algebra checks.
    Quantize {
        #[command(flatten)]
        ty: TypeArgs,
        /// Random generator pairs when checking all pairs is too large.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Verify catalog embeddings along chains such as A2,D3,B3.
    Embed {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated chain; repeat for several chains. Defaults to
        /// A2,A3 / A2,D3,B3 / A2,C3.
        #[arg(long)]
        chain: Vec<String>,
    },
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Family letter (A-D), or a full type such as B3.
    family: String,
    /// Rank, unless given with the family.
    rank: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Stop the generator enumeration after this degree.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
}

/// Errors mapped to exit codes: usage 2, verification 1.
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<cce_core::Error> for Failure {
    fn from(e: cce_core::Error) -> Self {
        use cce_core::Error as E;
        match e {
            E::UnsupportedRank { .. }
            | E::UnknownFamily(_)
            | E::MaxDegreeTooSmall { .. }
            | E::MalformedName(_)
            | E::NotAGenerator { .. }
            | E::MalformedRational(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_type(args: &TypeArgs) -> Result<AlgebraType, Failure> {
    let s = match args.rank {
        Some(r) => format!("{}{r}", args.family),
        None => args.family.clone(),
    };
    AlgebraType::parse(&s).map_err(Failure::from)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Roots(t) => commands::roots(parse_type(&t)?, &t.common),
        Command::Generators { ty, compare_paper } => {
            commands::generators(parse_type(&ty)?, &ty.common, compare_paper)
        }
        Command::Close { ty, full, samples } => commands::close(parse_type(&ty)?, &ty.common, full, samples),
        Command::Certify(t) => commands::certify(parse_type(&t)?, &t.common),
        Command::Quantize { ty, samples } => commands::quantize(parse_type(&ty)?, &ty.common, samples),
        Command::Embed { common, chain } => commands::embed(&common, &chain),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("CCE_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: CCE_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
    }
}
