// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for the `metric-duality` engine.
//!
//! Reports are JSON objects with a fixed key order. Exact values appear as
//! `"num/den"` or `"inf"`; sampled transforms appear as decimals. Exit codes are
//! 0 on success, 1 for rejected input and 2 when an identity that must hold fails.

pub mod cli;
pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub use cli::{Cli, Command};
pub use commands::{Outcome, Status};
pub use document::{parse_element_key, parse_value, NormDocument, NormKind, RealNormDocument};
pub use error::{CliError, Result};
pub use report::Report;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_all(paths: &[PathBuf]) -> Result<Vec<String>> {
    paths.iter().map(|p| read(p)).collect()
}

fn write(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs one subcommand without writing anything.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate { doc } => commands::validate(&read(doc)?),
        Command::Dual { doc } => commands::dual(&read(doc)?),
        Command::Regularise { doc } => commands::regularise(&read(doc)?),
        Command::Check { doc } => commands::check(&read(doc)?),
        Command::Restrict { doc, gens } => commands::restrict(&read(doc)?, gens),
        Command::Meet { docs } | Command::Join { docs } | Command::Product { docs } | Command::Structure { docs } => {
            let texts = read_all(docs)?;
            let texts: Vec<&str> = texts.iter().map(String::as_str).collect();
            match command {
                Command::Meet { .. } => commands::meet_docs(&texts),
                Command::Join { .. } => commands::join_docs(&texts),
                Command::Product { .. } => commands::product_docs(&texts),
                _ => commands::structure(&texts),
            }
        }
        Command::RealDual {
            doc,
            grid,
            samples,
            tol,
            ..
        } => commands::real_dual_samples(&read(doc)?, *grid, samples, *tol),
        Command::Verify { orders, draws, seed } => commands::verify(*orders, *draws, *seed),
    }
}

/// Runs the parsed command line, writes the report and any CSV, and returns the exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8> {
    let started = Instant::now();
    let mut outcome = execute(&cli.command)?;
    if cli.timing {
        outcome
            .report
            .set("elapsed_seconds", started.elapsed().as_secs_f64());
    }
    if let (Command::RealDual { csv: Some(path), .. }, Some(body)) = (&cli.command, &outcome.csv) {
        write(path, body)?;
    }
    let rendered = outcome.report.render();
    match &cli.output {
        Some(path) => write(path, &rendered)?,
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?,
    }
    Ok(outcome.status.exit_code())
}
