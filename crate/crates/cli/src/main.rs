mod commands;
mod error;
mod symbols;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Cli;
use crate::error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Inadmissible { suggestions, .. } = &e {
                if !suggestions.is_empty() {
                    let list: Vec<String> = suggestions.iter().map(usize::to_string).collect();
                    eprintln!("admissible k: {}", list.join(", "));
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
