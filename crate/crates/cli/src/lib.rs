//! The `qlab` command line: every library operation as a subcommand.
//!
//! Exit codes: 0 success, 1 a verification failed or a search was refused,
//! 2 usage errors and unreadable or malformed input.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;
use thiserror::Error;

pub use args::{Cli, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}

input_error!(
    chain_algebra::ChainError,
    cocycle_lib::CocycleError,
    cycle_lab::CycleError,
    quandle_core::QuandleError,
    term_structure::StructureError
);

/// A finished command: text for people, JSON for scripts, and whether
/// everything it checked held.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn new(text: String, json: Value, ok: bool) -> Self {
        Report { text, json, ok }
    }
}

/// Parses `args` (program name first), runs the command, writes the report
/// to `out` and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 2;
        }
    };
    match commands::dispatch(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text.trim_end().to_string(),
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json values serialize"),
            };
            let _ = writeln!(out, "{body}");
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("qlab: {e}");
            2
        }
    }
}
