//! File formats, reports and the `leapfrog` command line on top of
//! `leapfrog-core`.

pub mod args;
pub mod commands;
pub mod dot;
pub mod input;
pub mod json;

use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const VALIDATION: u8 = 3;
    pub const WRONG_RESIDUE: u8 = 4;
    pub const VERIFICATION: u8 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("output directory of {0} does not exist")]
    OutputDir(PathBuf),
    #[error("{0}")]
    Parse(String),
    #[error("graph {index}: {message}")]
    Invalid { index: usize, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read { .. } | CliError::OutputDir(_) | CliError::Parse(_) | CliError::Usage(_) => exit::PARSE,
            CliError::Write { .. } => exit::IO,
            CliError::Invalid { .. } => exit::VALIDATION,
        }
    }
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: args::Cli) -> u8 {
    match commands::dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("leapfrog: {e}");
            e.exit_code()
        }
    }
}
