mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use koornwinder::verify::Suite;

use commands::{BressoudMatrix, ComputeKind, TodaType};
use config::{CommonArgs, RunConfig, SEED_ENV};
use error::CliError;

/// Exact one-column Koornwinder polynomials and the identities around them.
#[derive(Parser, Debug)]
#[command(name = "koornwinder", version)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one object and print it.
    Compute {
        #[arg(value_enum)]
        kind: ComputeKind,
        /// Bressoud product to print.
        #[arg(long, value_enum, default_value = "b")]
        matrix: BressoudMatrix,
        /// Toda eigenfunction type.
        #[arg(long = "type", value_enum, default_value = "b")]
        toda_type: TodaType,
    },
    /// Run an identity suite (or `all`); exit status 1 if any check fails.
    Verify { suite: String },
    /// Print a block of the transition matrix C.
    Transition {
        /// Build C^(n) from the Bressoud product instead of the recursion.
        #[arg(long)]
        from_b: bool,
    },
    /// Print the Kostka polynomials of `(1^r)` for every `l`.
    Kostka,
    /// q-Toda eigenfunctions.
    Qtoda {
        #[command(subcommand)]
        action: QtodaAction,
    },
}

#[derive(Subcommand, Debug)]
enum QtodaAction {
    /// Residual of the branching conjecture at sampled spectral parameters.
    VerifyConjecture,
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let cfg = RunConfig::resolve(&cli.common, std::env::var(SEED_ENV).ok())?;
    let (out, ok) = match cli.command {
        Command::Compute { kind, matrix, toda_type } => (commands::compute(kind, &cfg, matrix, toda_type)?, true),
        Command::Verify { suite } => {
            let suite = match suite.as_str() {
                "all" => None,
                s => Some(s.parse::<Suite>()?),
            };
            commands::verify(suite, &cfg)?
        }
        Command::Transition { from_b } => (commands::transition(&cfg, from_b)?, true),
        Command::Kostka => (commands::kostka_table(&cfg)?, true),
        Command::Qtoda { action: QtodaAction::VerifyConjecture } => commands::verify_conjecture(&cfg)?,
    };
    Ok((out.emit(cfg.format)?, ok))
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => return fail(&CliError::Usage(e.to_string().trim_end().to_string())),
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(&e),
    }
}
