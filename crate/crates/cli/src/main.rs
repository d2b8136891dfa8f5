use std::process::ExitCode;

use clap::Parser;

use deckrec_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{}", outcome.text);
    }
    ExitCode::from(outcome.status as u8)
}
