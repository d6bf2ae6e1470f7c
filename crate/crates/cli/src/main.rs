mod args;
mod cache;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use cache::Cache;
use commands::{Ctx, Outcome};
use error::{CliError, CliResult, EXIT_INVALID, EXIT_OK};

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let ctx = Ctx {
        cache: cli.cache_dir.as_deref().map(Cache::new),
        cap: usize::try_from(cli.cap).unwrap_or(usize::MAX),
        format: cli.format,
    };
    match &cli.command {
        Command::Lattice { m, n } => commands::lattice(&ctx, m.m, *n),
        Command::Intervals { m, n, with_q, list } => commands::intervals(&ctx, m.m, *n, *with_q, *list),
        Command::Series { m, order, with_q, z, y_one } => {
            commands::series(&ctx, m.m, *order, *with_q, *z, *y_one)
        }
        Command::Verify { m, n, order, checks, all } => commands::verify(&ctx, *m, *n, *order, checks, *all),
        Command::Bijection { m, labelled, parking } => {
            commands::bijection(&ctx, m.m, labelled.as_deref(), parking.as_deref())
        }
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_INVALID as u8),
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(outcome.stdout.as_bytes()).and_then(|_| out.flush()) {
                return report(&CliError::Io(e));
            }
            match outcome.failure {
                Some(e) => report(&e),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => report(&e),
    }
}
