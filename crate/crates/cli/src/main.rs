//! Command-line front end: builds game instances from flags, runs the
//! solver and the analysis suites, and hosts an interactive play mode.
//!
//! Exit statuses: 0 success or all-confirmed, 1 a proposition was
//! refuted, 2 unsolved within the resource limits, 3 usage error.
//! Failures print a single `error: ...` line on standard error.

mod args;
mod play;
mod report;

use std::fmt;
use std::process::ExitCode;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

pub(crate) const EXIT_OK: u8 = 0;
pub(crate) const EXIT_REFUTED: u8 = 1;
pub(crate) const EXIT_UNSOLVED: u8 = 2;
pub(crate) const EXIT_USAGE: u8 = 3;

/// Error carrying the process exit status; plain errors exit 3.
#[derive(Debug)]
pub(crate) struct ExitWith {
    code: u8,
    message: String,
}

impl fmt::Display for ExitWith {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ExitWith {}

pub(crate) fn fail(code: u8, message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(ExitWith {
        code,
        message: message.into(),
    })
}

fn one_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::from(EXIT_OK);
            }
            let raw = err.to_string();
            let gist = raw.split("\nUsage:").next().unwrap_or(&raw);
            let gist = gist.split("\nFor more information").next().unwrap_or(gist);
            eprintln!("error: {}", one_line(gist.trim_start_matches("error: ")));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let code = err
                .downcast_ref::<ExitWith>()
                .map(|e| e.code)
                .unwrap_or(EXIT_USAGE);
            eprintln!("error: {}", one_line(&format!("{err:#}")));
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(args) => report::run_solve(args),
        Command::Span(args) => report::run_span(args),
        Command::Verify(args) => report::run_verify(args),
        Command::Trend(args) => report::run_trend(args),
        Command::Gen(args) => report::run_gen(args),
        Command::Play(args) => play::run_play(args),
    }
}
