use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use doxa_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe (`doxa ... | head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
