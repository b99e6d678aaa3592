use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exact_charpoly::cli::{
    cmd_bench, cmd_compute, cmd_verify, cmd_witness, default_sizes, parse_matrices, parse_matrix, AlgorithmChoice,
    Format, Outcome, Quantity, RunConfig, WitnessRequest, EXIT_USAGE,
};
use exact_charpoly::Field;

#[derive(Parser)]
#[command(name = "charpoly", version, about = "Exact characteristic polynomials and linear-algebra witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// q for the rationals, gf:<p> for a prime field
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: Field,
    /// csanky, berkowitz, oracle or all
    #[arg(long, value_parser = parse_alg)]
    alg: Option<AlgorithmChoice>,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: Format,
    /// Evaluate independent subproducts on the thread pool
    #[arg(long)]
    parallel: bool,
    /// Input file (stdin when absent)
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Corpus {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 5)]
    max_dim: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Charpoly,
    Det,
    Adj,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Annihilator,
    Invzero,
    Steinitz,
    Powers,
    Krylov,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, determinant, adjugate or inverse of one matrix
    Compute {
        what: What,
        #[command(flatten)]
        common: Common,
    },
    /// Check the algebraic identities on a seeded random corpus
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        corpus: Corpus,
    },
    /// Construct and check a witness for one matrix (two for steinitz)
    Witness {
        kind: Kind,
        /// Starting vector e_i for krylov (1-based)
        #[arg(long, default_value_t = 1)]
        index: usize,
        /// Number of powers for powers
        #[arg(long, default_value_t = 4)]
        terms: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Time the algorithms under each product schedule, as CSV
    Bench {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        corpus: Corpus,
        /// Comma-separated sizes (default: 4, 8, 16, ... up to --max-dim)
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: exact_charpoly::Error| e.to_string())
}

fn parse_alg(s: &str) -> Result<AlgorithmChoice, String> {
    s.parse().map_err(|e: exact_charpoly::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: exact_charpoly::Error| e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    let mut text = String::new();
    match path {
        Some(p) => text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
        }
    }
    Ok(text)
}

fn config(common: &Common, corpus: Option<&Corpus>, default_alg: AlgorithmChoice) -> RunConfig {
    let mut cfg = RunConfig {
        field: common.field,
        algorithm: common.alg.unwrap_or(default_alg),
        parallel: common.parallel,
        ..RunConfig::default()
    };
    if let Some(c) = corpus {
        cfg.seed = c.seed;
        cfg.count = c.count;
        cfg.max_dim = c.max_dim;
    }
    cfg
}

fn run(cli: Cli) -> Outcome {
    let berkowitz = AlgorithmChoice::One(exact_charpoly::charpoly::Algorithm::Berkowitz);
    match cli.command {
        Command::Compute { what, common } => {
            let cfg = config(&common, None, berkowitz);
            let a = match read_input(&common.input)
                .map_err(|e| e.to_string())
                .and_then(|text| parse_matrix(&text, common.format, common.field).map_err(|e| e.to_string()))
            {
                Ok(a) => a,
                Err(e) => return Outcome::usage(e),
            };
            let q = match what {
                What::Charpoly => Quantity::Charpoly,
                What::Det => Quantity::Det,
                What::Adj => Quantity::Adj,
                What::Inv => Quantity::Inv,
            };
            cmd_compute(q, &a, &cfg, common.format)
        }
        Command::Verify { common, corpus } => cmd_verify(&config(&common, Some(&corpus), AlgorithmChoice::All)),
        Command::Witness { kind, index, terms, common } => {
            let inputs = match read_input(&common.input)
                .and_then(|text| parse_matrices(&text, common.format, common.field).map_err(|e| e.to_string()))
            {
                Ok(m) => m,
                Err(e) => return Outcome::usage(e),
            };
            let req = match kind {
                Kind::Annihilator => WitnessRequest::Annihilator,
                Kind::Invzero => WitnessRequest::InvZero,
                Kind::Steinitz => WitnessRequest::Steinitz,
                Kind::Powers => WitnessRequest::Powers { terms },
                Kind::Krylov => WitnessRequest::Krylov { index },
            };
            cmd_witness(req, &inputs, common.format)
        }
        Command::Bench { common, corpus, sizes } => {
            let cfg = config(&common, Some(&corpus), AlgorithmChoice::All);
            let sizes = sizes.unwrap_or_else(|| default_sizes(cfg.max_dim));
            cmd_bench(&cfg, &sizes)
        }
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(u8::try_from(outcome.code).unwrap_or(EXIT_USAGE as u8))
}
