//! Command-line companion to `acnc-core`: the circuit description language,
//! CSV output and the figure sweeps.

pub mod circuit;
pub mod csvfmt;
pub mod figures;

use std::path::PathBuf;

/// Everything the binary can fail with, mapped onto exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] circuit::ParseError),
    #[error("{0}")]
    Exec(#[from] circuit::ExecError),
    #[error("{0}")]
    Core(#[from] acnc_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for parse or validation errors, 3 for numerical failures, 1 for IO.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Exec(e) if e.source.is_numerical() => 3,
            CliError::Exec(_) => 2,
            CliError::Core(e) if e.is_numerical() => 3,
            CliError::Core(_) => 2,
            CliError::Read { .. } | CliError::Write(_) => 1,
        }
    }
}
