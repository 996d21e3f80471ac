use std::process::ExitCode;

use clap::Parser;
use qflop::{render, run, Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            print!("{}", render(&rep, cli.format));
            let self_test_failed =
                cli.command == Command::SelfTest && rep.verdicts.get("all_passed") != Some(&true.into());
            if self_test_failed {
                ExitCode::from(qflop::error::EXIT_INTERNAL as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
