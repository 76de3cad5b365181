// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::Parser;
use dualctl::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; exit code 2 is reserved for defects.
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    match run(&cli, &mut std::io::stdout().lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dualctl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
