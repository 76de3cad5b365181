// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Engine(#[from] metric_duality::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    /// An identity that the engine guarantees failed to hold.
    #[error("defect: {0}")]
    Defect(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// 1 for rejected input, 2 for engine defects.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Defect(_) => 2,
            CliError::Engine(e) if !e.is_input_error() => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
