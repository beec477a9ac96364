mod args;
mod commands;
mod error;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use error::{CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    let outcome = commands::run(&cli).and_then(|out| {
        match &cli.output {
            Some(path) => {
                fs::write(path, &out.body).map_err(|source| CliError::Write { path: path.clone(), source })?
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(out.body.as_bytes());
            }
        }
        Ok(out.exit)
    });

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
