//! Command implementations behind the `maxsafe` binary.
//!
//! Every command renders its whole report to a string so the binary only
//! prints and exits; tests call [`run`] directly.

pub mod args;
pub mod commands;
pub mod format;
pub mod tables;

use std::ffi::OsString;
use std::path::Path;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] maxsafe_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

/// Exit codes: success or all held, a violation or mismatch, bad usage or input.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn success(text: String) -> Self {
        Report {
            text,
            code: EXIT_OK,
        }
    }

    fn failure(text: String) -> Self {
        Report {
            text,
            code: EXIT_FAILURE,
        }
    }
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Rank(a) => commands::rank_cmd(a),
        Command::DecoyScan(a) => commands::decoy_scan_cmd(a),
        Command::Axioms(a) => commands::axioms_cmd(a),
        Command::PaperTables => {
            let (text, ok) = tables::render()?;
            Ok(if ok {
                Report::success(text)
            } else {
                Report::failure(text)
            })
        }
        Command::SynthDecoy(a) => commands::synth_cmd(a),
        Command::Replay(a) => commands::replay_cmd(&a.witness_file),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Invocation {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Invocation {
            stdout: report.text,
            stderr: String::new(),
            code: report.code,
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        },
    }
}
