use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tritospec::cli::Command;
use tritospec::commands::{run, Output};
use tritospec::{seed_from_env, Cli, CliError};

fn execute(cli: &Cli) -> Result<(), CliError> {
    let seed = seed_from_env()?;
    let text = match run(&cli.command, seed)? {
        Output::Report(r) => r.to_json() + "\n",
        Output::Csv(s) => s,
    };
    let out = match &cli.command {
        Command::Figure { out, .. } => out.as_ref(),
        _ => None,
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { tritospec::EXIT_USAGE } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
