//! The `partlab` command-line frontend.

pub mod commands;
pub mod config;
pub mod error;
pub mod suites;

use std::ffi::OsString;
use std::fs;

use clap::Parser;

use crate::commands::Outcome;
use crate::config::{Cli, Command, OutputArgs};
use crate::error::CliError;

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Count(a) => commands::count(a),
        Command::Table(a) => commands::table(a),
        Command::Analyze(a) => commands::analyze(a),
        Command::Verify(a) => commands::verify(a),
        Command::Explore(a) => commands::explore(a),
        Command::Sparse(a) => commands::sparse(a),
    }
}

fn output_args(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Count(a) => &a.output,
        Command::Table(a) => &a.output,
        Command::Analyze(a) => &a.output,
        Command::Verify(a) => &a.output,
        Command::Explore(a) => &a.output,
        Command::Sparse(a) => &a.output,
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Some(path) = &output_args(&cli).out {
                if let Err(e) = fs::write(path, &outcome.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else {
                print!("{}", outcome.text);
            }
            outcome.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
