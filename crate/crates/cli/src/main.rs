use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use numrad::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(outcome.output.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("numrad: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
