//! Command-line front end: argument grammar, Cayley-table and catalog
//! ingestion, DOT/JSON export.

pub mod args;
pub mod catalog_file;
pub mod cayley;
pub mod commands;
pub mod error;
pub mod export;

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser};

use args::{CatalogCommand, Cli, Command};
pub use error::{CliError, CliResult};

/// Runs one invocation and returns the exit code: 0 success, 1 a check
/// failed, 2 usage or input error, 3 budget exhausted.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (sub, result) = match &cli.command {
        Command::Graph(a) => ("graph", commands::graph(a, out)),
        Command::Analyze(a) => ("analyze", commands::analyze_cmd(a, out)),
        Command::Verify(a) => ("verify", commands::verify(a, out, &mut *err)),
        Command::Catalog {
            command: CatalogCommand::List { catalog, max_order },
        } => ("catalog", commands::catalog_list(catalog, *max_order, out)),
        Command::Import(a) => ("import", commands::import(a, out)),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let mut cmd = Cli::command();
            cmd.build();
            let sub = cmd.find_subcommand_mut(sub).expect("known subcommand");
            let e = sub.error(clap::error::ErrorKind::ArgumentConflict, msg);
            let _ = write!(err, "{}", e.render());
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
