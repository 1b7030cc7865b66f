//! Command line front end: argument parsing, report serialization and the
//! subcommand implementations. The mining itself lives in `negarm-core`;
//! this crate turns runs into stable JSON and CSV, diffs reports, and
//! generates seeded test data.

pub mod args;
pub mod commands;
pub mod error;
pub mod generator;
pub mod report;

pub use args::{Cli, Command};
pub use error::CliError;

use std::io::Write;

/// Dispatches a parsed command line. Returns the exit code on success;
/// errors carry their own code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Mine(args) => commands::cmd_mine(args, out),
        Command::Classify(args) => commands::cmd_classify(args, out),
        Command::Gen(args) => commands::cmd_gen(args, out),
        Command::Report(args) => commands::cmd_report(args, out),
    }
}
