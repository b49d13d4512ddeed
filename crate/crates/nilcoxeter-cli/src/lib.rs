//! Command line front end: argument parsing, commands and the acceptance suite.

mod commands;
pub mod report;
pub mod suite;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{Cli, Command, Format};

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `args` (including the program name). Exit code 0 means
/// every check passed, 1 that a check failed and 2 that the arguments were
/// rejected.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match commands::execute(&cli.command) {
        Err(msg) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            match report.first_failure() {
                None => Outcome { code: 0, stdout, stderr: String::new() },
                Some(v) => Outcome { code: 1, stdout, stderr: format!("check failed: {}\n", v.name) },
            }
        }
    }
}
