// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Exact duality computations on finite abelian groups and sampled transforms on R.
#[derive(Debug, Parser)]
#[command(name = "dualctl", version)]
pub struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Record wall-clock time in the report. Reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a document describes a quasi-norm.
    Validate { doc: PathBuf },
    /// Dual quasi-norm on the character group.
    Dual { doc: PathBuf },
    /// Regularisation (the second dual pulled back to the group).
    #[command(alias = "regularize")]
    Regularise { doc: PathBuf },
    /// Regularity, reflexivity, kernel and finite part.
    Check { doc: PathBuf },
    /// Order infimum among regular quasi-norms.
    Meet {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
    /// Pointwise supremum.
    Join {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
    /// Restriction to the subgroup generated by the given elements.
    Restrict {
        doc: PathBuf,
        /// Generator as a residue tuple such as "(2,0)". Repeatable; none gives the trivial subgroup.
        #[arg(long = "gen", value_name = "TUPLE")]
        gens: Vec<String>,
    },
    /// Max-product on the direct product of the groups.
    Product {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
    /// Metric-structure flags for a family of quasi-norms on one group.
    Structure {
        #[arg(required = true)]
        docs: Vec<PathBuf>,
    },
    /// Sample the dual and second dual of a norm on the real line.
    RealDual {
        doc: PathBuf,
        /// Scan size for each supremum.
        #[arg(long, default_value_t = 4096)]
        grid: usize,
        /// Comma-separated sample points.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1.., allow_negative_numbers = true)]
        samples: Vec<f64>,
        /// Also write the samples as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Allowed relative gap between the numerical dual and its closed form.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run the property suite over generated groups and quasi-norms.
    Verify {
        /// Largest group order.
        #[arg(long, default_value_t = 16)]
        orders: usize,
        /// Quasi-norms drawn per group.
        #[arg(long, default_value_t = 25)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
