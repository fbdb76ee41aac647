use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cosetlab::cli::{exit_code, render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(render(&report, cli.global.output).as_bytes());
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
