use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use symclass::cli::{exit, run, Cli};

fn main() -> ExitCode {
    let (config, output) = Cli::parse().into_config();
    let outcome = run(&config);
    let written = match output {
        Some(path) => std::fs::write(&path, &outcome.document),
        None => std::io::stdout().write_all(outcome.document.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("symclass: cannot write report: {err}");
        return ExitCode::from(exit::INTERNAL as u8);
    }
    ExitCode::from(outcome.status as u8)
}
