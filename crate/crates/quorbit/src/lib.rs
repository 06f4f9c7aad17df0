//! Command-line front end for `quorbit-core`: argument parsing, JSON and CSV
//! formats, and the `run` entry point used by the binary.

pub mod args;
mod commands;
mod figure;
pub mod records;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

pub use args::Cli;

/// Successful run.
pub const EXIT_OK: i32 = 0;
/// Bad flags, malformed input or a library error.
pub const EXIT_ERROR: i32 = 1;
/// `check` ran but at least one input is not a state.
pub const EXIT_NOT_A_STATE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] quorbit_core::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Header plus rows of already formatted cells.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    /// One JSON document per line.
    Json(Vec<Value>),
    Table(Table),
}

/// Output plus whether every checked input was a state.
pub struct Outcome {
    pub output: Output,
    pub all_states: bool,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, all_states: true }
    }
}

/// Shortest representation that parses back to the same `f64`.
pub(crate) fn cell(x: f64) -> String {
    format!("{x}")
}

fn write_output(output: &Output, out: &mut dyn Write) -> Result<()> {
    match output {
        Output::Json(docs) => {
            for d in docs {
                serde_json::to_writer(&mut *out, d)?;
                writeln!(out)?;
            }
        }
        Output::Table(t) => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&t.header)?;
            for row in &t.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Parse `argv` (program name first), execute, and return the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
        }
    };
    let result = commands::execute(&cli, stdin).and_then(|outcome| {
        match &cli.out {
            Some(path) => {
                let mut f = BufWriter::new(File::create(path)?);
                write_output(&outcome.output, &mut f)?;
            }
            None => write_output(&outcome.output, stdout)?,
        }
        Ok(outcome.all_states)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_NOT_A_STATE,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}
