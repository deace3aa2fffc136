use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use morse_driver::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("morse: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("morse: {msg}");
        return ExitCode::from(2);
    }
    if outcome.numerical_failure {
        eprintln!("morse: some rows failed to converge; see the status column");
    }
    ExitCode::from(outcome.exit_code())
}
