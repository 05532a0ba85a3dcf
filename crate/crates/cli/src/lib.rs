//! Library half of the `rmub` command-line tool.
//!
//! [`run`] parses arguments and executes one command, returning the exit
//! code and captured output so the same path serves the binary and tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 infeasible parameters, 4 budget exceeded.

pub mod args;
pub mod formats;
mod handlers;
pub mod store;

use std::ffi::OsString;

use clap::Parser;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    pub(crate) fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    pub(crate) fn input(message: impl Into<String>) -> Self {
        Self::new(EXIT_INPUT, message)
    }

    pub(crate) fn infeasible(message: impl Into<String>) -> Self {
        Self::new(EXIT_INFEASIBLE, message)
    }
}

impl From<rmub::Error> for Failure {
    fn from(e: rmub::Error) -> Self {
        use rmub::Error::*;
        let code = match &e {
            LengthMismatch { .. } | DimensionMismatch { .. } | Malformed(_) => EXIT_INPUT,
            Verification(_) => EXIT_VERIFY,
            BudgetExceeded { .. } => EXIT_BUDGET,
            Overflow | SizeLimit { .. } | Infeasible(_) | Unsupported(_) | RankDeficient { .. } | Inconsistent => {
                EXIT_INFEASIBLE
            }
        };
        Self::new(code, e.to_string())
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match handlers::execute(cli.command) {
        Ok(out) => out,
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}
