use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wsbound_cli::{resolve, run, Cli, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = resolve(&cli.command).and_then(|config| {
        let outcome = run(&config)?;
        if !outcome.body.is_empty() {
            match &config.output {
                Some(path) => {
                    std::fs::write(path, &outcome.body).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?
                }
                None => {
                    let _ = std::io::stdout().lock().write_all(outcome.body.as_bytes());
                }
            }
        }
        Ok(outcome)
    });
    match outcome {
        Ok(o) => {
            for d in &o.diagnostics {
                eprintln!("wsbound: {d}");
            }
            ExitCode::from(o.status)
        }
        Err(e @ CliError::Usage(_)) => {
            eprintln!("wsbound: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e) => {
            eprintln!("wsbound: {e}");
            ExitCode::FAILURE
        }
    }
}
