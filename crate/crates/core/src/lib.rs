// SPDX-License-Identifier: Apache-2.0

//! Metric duality on abelian groups.
//!
//! The exact part works on finite groups `Z/n1 × … × Z/nk`: quasi-norm tables,
//! their duals on the character group, regularisations, lattice operations and
//! families of quasi-norms. The numerical part computes dual transforms of
//! monotone norms on `R`, and the dual pairs between `Z` and the circle `T`.

pub mod abelian;
pub mod continuous;
pub mod duality;
pub mod error;
pub mod ext;
pub mod quasinorm;
pub mod structures;
pub mod verify;

pub use abelian::{
    make_group, subgroup_characters, subgroup_generate, Character, CharacterClass,
    FiniteAbelianGroup, GroupElement, Subgroup,
};
pub use error::{Error, Result};
pub use ext::{rational, ExtValue, Rational};
pub use quasinorm::{
    join, meet, product, random_quasinorm, Axiom, AxiomViolation, Carrier, QuasiNorm,
    RegularityReport,
};
