//! `epr-frames`: truth table, simulations, angle scans and CHSH runs.
//!
//! Exit status: 0 success, 1 truth table differs from the golden file,
//! 2 usage error, 3 golden file missing, 4 computation error, 5 I/O error.

mod args;
mod commands;
mod render;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{run, Failure};

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("writing {}", path.display()), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io("writing stdout".into(), e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        emit(&cli, &outcome.text)?;
        outcome.deferred.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("epr-frames: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
