// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::quasinorm::AxiomViolation;

/// Errors produced by the duality engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a quasi-norm: {0}")]
    Axiom(AxiomViolation),

    #[error("quasi-norms are defined on different groups")]
    MixedGroups,

    /// An internal identity that must hold by construction failed. Always a defect.
    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by the caller's input rather than by the engine.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Contract(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
