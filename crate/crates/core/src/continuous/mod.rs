// SPDX-License-Identifier: Apache-2.0

//! Dual transforms on the one-dimensional groups `R`, `Z` and the circle `T`.
//!
//! Unlike the finite engine this part works in binary64 with explicit tolerances.

pub mod circle;
pub mod real;
mod search;

pub use circle::{t_dual_at, z_dual_at, TNorm, ZDual, ZNorm};
pub use real::{
    is_quasiconcave, quasiconcavity_of, real_bidual, real_bidual_fixpoint, real_dual, real_dual_closed,
    BidualReport, EnvelopeCheck, QuasiConcavity, RealNorm, ShapeDefect,
};

use crate::error::{Error, Result};
use crate::ext::Rational;
use num_traits::{One, Signed, Zero};

/// Grid sizes and tolerances for the numerical transforms.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformConfig {
    /// Nodes in the initial scan of a supremum.
    pub grid_points: usize,
    /// Scan size for the inner transform when transforms are nested.
    pub inner_grid_points: usize,
    /// Zoom rounds around the best node before golden-section polishing.
    pub refinement_rounds: usize,
    /// Relative tolerance for comparisons between computed quantities.
    pub rel_tol: f64,
    /// Relative slack allowed in monotonicity probes.
    pub shape_slack: f64,
    /// Density of geometric probe grids.
    pub probes_per_decade: usize,
    /// Bound on the number of terms in a series before a norm is declared not proper.
    pub max_terms: u64,
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            grid_points: 4096,
            inner_grid_points: 128,
            refinement_rounds: 3,
            rel_tol: 1e-6,
            shape_slack: 1e-9,
            probes_per_decade: 20,
            max_terms: 10_000_000,
        }
    }
}

impl TransformConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points == 0 || self.inner_grid_points == 0 || self.probes_per_decade == 0 {
            return Err(Error::input("grid sizes must be positive"));
        }
        if self.max_terms == 0 {
            return Err(Error::input("the term bound must be positive"));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::input(format!("tolerance {} must be positive", self.rel_tol)));
        }
        if !(self.shape_slack >= 0.0 && self.shape_slack.is_finite()) {
            return Err(Error::input(format!("shape slack {} must be nonnegative", self.shape_slack)));
        }
        Ok(())
    }
}

/// Bound on the dual value of a character that maps the open ball of radius `r`
/// into the closed arc of radius 1/4 around 1: `1 / (2r)`.
///
/// If `p(x) < r/(N+1)` then `N·x` stays in the ball for the first `N` multiples, so
/// `N·λ(φ(x)) ≤ 1/4` because `λ(z^j) = j·λ(z)` while `j·λ(z) ≤ 1/2`. Choosing `N`
/// maximal gives `λ(φ(x)) ≤ p(x)/(2r)` for every `x`.
pub fn ball_lipschitz_bound(r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::input(format!("radius {r} must be positive and finite")));
    }
    Ok(1.0 / (2.0 * r))
}

/// Exact form of [`ball_lipschitz_bound`].
pub fn ball_lipschitz_bound_exact(r: Rational) -> Result<Rational> {
    if !r.is_positive() || r.is_zero() {
        return Err(Error::input(format!("radius {r} must be positive")));
    }
    Ok(Rational::one() / (r * Rational::from_integer(2)))
}
