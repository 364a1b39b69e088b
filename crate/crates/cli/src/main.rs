use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use leibquot_cli::{
    cmd_analyze, cmd_check_quotient, cmd_qmax, cmd_replicate, cmd_validate, parse_suite, CmdResult, Exit, Failure,
};
use leibquot_core::ideals::DEFAULT_SEED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "leibquot", version, about = "Exact quotient computations for finite-dimensional Leibniz algebras")]
struct Cli {
    /// Seed for every randomized search; accepts decimal or 0x-prefixed hex.
    #[arg(long, global = true, env = "LEIBQUOT_SEED", value_parser = parse_seed)]
    seed: Option<u64>,

    /// Report format: JSON lines or a human-readable summary.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Leave the elapsed time out of the report.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse an algebra file and evaluate the Leibniz identities.
    Validate { path: PathBuf },
    /// Annihilators, semiprimeness, primeness and the minimal essential ideal.
    Analyze {
        path: PathBuf,
        /// Decide by enumerating the ideal lattice (finite fields only).
        #[arg(long)]
        oracle: bool,
    },
    /// Build the maximal algebra of quotients.
    Qmax {
        path: PathBuf,
        /// Write the algebra here and the embedding to `<stem>.phi.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Proceed when semiprimeness is plausible but not certified.
        #[arg(long)]
        assume_semiprime: bool,
    },
    /// Decide whether Q is an algebra of quotients of a subalgebra.
    CheckQuotient {
        path: PathBuf,
        /// Basis of L inside Q: `1,0,0;0,1,0`, or `@file` holding a matrix file or a list of vectors.
        #[arg(long)]
        subalgebra: Option<String>,
    },
    /// Run the property suites.
    Replicate {
        /// `all` or `section N`.
        #[arg(long, num_args = 1..=2, default_value = "all")]
        suite: Vec<String>,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn dispatch(command: &Command, seed: u64) -> CmdResult {
    match command {
        Command::Validate { path } => cmd_validate(path, seed),
        Command::Analyze { path, oracle } => cmd_analyze(path, *oracle, seed),
        Command::Qmax {
            path,
            out,
            assume_semiprime,
        } => cmd_qmax(path, out.as_deref(), *assume_semiprime, seed),
        Command::CheckQuotient { path, subalgebra } => cmd_check_quotient(path, subalgebra.as_deref(), seed),
        Command::Replicate { suite } => cmd_replicate(parse_suite(suite)?, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let start = Instant::now();
    let exit = match dispatch(&cli.command, seed) {
        Ok(outcome) => {
            let elapsed = (!cli.no_timing).then(|| start.elapsed());
            match cli.format {
                Format::Json => {
                    print!("{}", outcome.report.to_json_lines(elapsed));
                    eprintln!(
                        "{}: {} records, {} failures, {} unverified",
                        if outcome.exit == Exit::Pass { "pass" } else { "fail" },
                        outcome.report.records.len(),
                        outcome.report.failures(),
                        outcome.report.unverified()
                    );
                }
                Format::Text => print!("{}", outcome.report.to_text(elapsed)),
            }
            outcome.exit
        }
        Err(Failure { exit, message }) => {
            eprintln!("leibquot: {message}");
            exit
        }
    };
    ExitCode::from(exit.code() as u8)
}
