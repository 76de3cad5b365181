// SPDX-License-Identifier: Apache-2.0

//! Monotone norms `t ↦ ω(|t|)` on the real line and their duals.
//!
//! With `R` identified with its own character group through `t ↦ exp(2πi t·)`,
//! the dual of a monotone proper norm is
//!
//! ```text
//! ω'(t) = sup_{s ∈ (0, 1/2]} s / ω(s/t)
//! ```
//!
//! and for quasi-concave `ω` (increasing, `ω(t)/t` non-increasing) the supremum
//! sits at `s = 1/2`, giving `ω'(t) = 1 / (2 ω(1/(2t)))`.

use super::search::interval_sup;
use super::TransformConfig;
use crate::error::{Error, Result};

/// A monotone, subadditive, proper function `ω: [0, ∞) → [0, ∞)` with `ω(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum RealNorm {
    /// `t^α`, `0 < α <= 1`.
    Power { alpha: f64 },
    /// `c·t`.
    Linear { slope: f64 },
    /// `ln(1 + t/scale)`.
    Log1p { scale: f64 },
    /// Piecewise linear through `breakpoints` (first one `(0, 0)`), continued with
    /// `tail_slope` after the last breakpoint.
    Table {
        breakpoints: Vec<(f64, f64)>,
        tail_slope: f64,
    },
    /// `factor · base`.
    Scaled { factor: f64, base: Box<RealNorm> },
}

impl RealNorm {
    pub fn power(alpha: f64) -> Self {
        RealNorm::Power { alpha }
    }

    pub fn scaled(self, factor: f64) -> Self {
        RealNorm::Scaled {
            factor,
            base: Box::new(self),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t = t.abs();
        match self {
            RealNorm::Power { alpha } => t.powf(*alpha),
            RealNorm::Linear { slope } => slope * t,
            RealNorm::Log1p { scale } => (t / scale).ln_1p(),
            RealNorm::Table {
                breakpoints,
                tail_slope,
            } => {
                let &(t_last, v_last) = breakpoints.last().expect("validated table");
                if t >= t_last {
                    return v_last + tail_slope * (t - t_last);
                }
                let k = breakpoints.partition_point(|&(x, _)| x <= t);
                let (x0, y0) = breakpoints[k - 1];
                let (x1, y1) = breakpoints[k];
                y0 + (y1 - y0) * (t - x0) / (x1 - x0)
            }
            RealNorm::Scaled { factor, base } => factor * base.eval(t),
        }
    }

    /// Interior breakpoints, used as extra probe points.
    fn knots(&self) -> Vec<f64> {
        match self {
            RealNorm::Table { breakpoints, .. } => {
                breakpoints.iter().map(|&(x, _)| x).filter(|&x| x > 0.0).collect()
            }
            RealNorm::Scaled { base, .. } => base.knots(),
            _ => Vec::new(),
        }
    }

    fn check_parameters(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        match self {
            RealNorm::Power { alpha } => {
                if !(*alpha > 0.0 && *alpha <= 1.0) {
                    return bad(format!("power exponent {alpha} must lie in (0, 1]"));
                }
            }
            RealNorm::Linear { slope } => {
                if !(*slope > 0.0 && slope.is_finite()) {
                    return bad(format!("linear slope {slope} must be positive"));
                }
            }
            RealNorm::Log1p { scale } => {
                if !(*scale > 0.0 && scale.is_finite()) {
                    return bad(format!("log1p scale {scale} must be positive"));
                }
            }
            RealNorm::Table {
                breakpoints,
                tail_slope,
            } => {
                if breakpoints.len() < 2 {
                    return bad("a table needs at least two breakpoints".into());
                }
                if breakpoints[0] != (0.0, 0.0) {
                    return bad("a table must start at (0, 0)".into());
                }
                for w in breakpoints.windows(2) {
                    if !(w[1].0 > w[0].0) || !w[1].0.is_finite() || !w[1].1.is_finite() {
                        return bad(format!(
                            "breakpoints must be finite with increasing abscissae, got {:?} then {:?}",
                            w[0], w[1]
                        ));
                    }
                }
                if !(*tail_slope > 0.0 && tail_slope.is_finite()) {
                    return bad(format!(
                        "not proper: tail slope {tail_slope} must be positive"
                    ));
                }
            }
            RealNorm::Scaled { factor, base } => {
                if !(*factor > 0.0 && factor.is_finite()) {
                    return bad(format!("scale factor {factor} must be positive"));
                }
                base.check_parameters()?;
            }
        }
        Ok(())
    }

    /// Checks `ω(0) = 0`, positivity, monotonicity and subadditivity on a probe grid,
    /// and properness from the parameters. The error names the property and probe pair.
    pub fn validate(&self, cfg: &TransformConfig) -> Result<()> {
        self.check_parameters()?;
        if self.eval(0.0) != 0.0 {
            return Err(Error::input("omega(0) must be 0"));
        }
        let mut probes = geometric_probes(1e-6, 1e6, cfg.probes_per_decade);
        probes.extend(self.knots());
        probes.sort_by(f64::total_cmp);
        probes.dedup();
        let vals: Vec<f64> = probes.iter().map(|&t| self.eval(t)).collect();
        for (t, v) in probes.iter().zip(&vals) {
            if !(*v > 0.0) || !v.is_finite() {
                return Err(Error::input(format!(
                    "not a norm: omega({t}) = {v} must be positive and finite"
                )));
            }
        }
        for i in 1..probes.len() {
            if vals[i] < vals[i - 1] {
                return Err(Error::input(format!(
                    "not monotone: omega({}) = {} > omega({}) = {}",
                    probes[i - 1],
                    vals[i - 1],
                    probes[i],
                    vals[i]
                )));
            }
        }
        let mut coarse = geometric_probes(1e-3, 1e3, 5);
        coarse.extend(self.knots());
        for &s in &coarse {
            for &t in &coarse {
                let lhs = self.eval(s + t);
                let rhs = self.eval(s) + self.eval(t);
                if lhs > rhs * (1.0 + 1e-12) {
                    return Err(Error::input(format!(
                        "not subadditive: omega({s} + {t}) = {lhs} > {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `count_per_decade` points per factor of ten from `lo` to `hi`, endpoints included.
pub(crate) fn geometric_probes(lo: f64, hi: f64, count_per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let n = (decades * count_per_decade as f64).round() as usize;
    (0..=n)
        .map(|i| lo * 10f64.powf(decades * i as f64 / n as f64))
        .collect()
}

/// `sup_{s ∈ (0,1/2]} s / f(s/t)` for an arbitrary evaluator.
pub(crate) fn dual_transform(f: impl Fn(f64) -> f64, t: f64, grid: usize, rounds: usize) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let t = t.abs();
    interval_sup(|s| s / f(s / t), 0.0, 0.5, grid, rounds).value
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::input(format!("t = {t} must be positive and finite")));
    }
    Ok(())
}

/// Numerical dual `ω'(t)`.
pub fn real_dual(norm: &RealNorm, t: f64, cfg: &TransformConfig) -> Result<f64> {
    cfg.validate()?;
    norm.validate(cfg)?;
    check_t(t)?;
    Ok(dual_transform(|x| norm.eval(x), t, cfg.grid_points, cfg.refinement_rounds))
}

/// Closed form `1 / (2 ω(1/(2t)))`, valid for quasi-concave `ω` only.
pub fn real_dual_closed(norm: &RealNorm, t: f64, cfg: &TransformConfig) -> Result<f64> {
    norm.validate(cfg)?;
    check_t(t)?;
    let qc = is_quasiconcave(norm, cfg);
    if !qc.holds {
        return Err(Error::input(format!(
            "the closed-form dual needs a quasi-concave norm ({})",
            qc.describe()
        )));
    }
    Ok(1.0 / (2.0 * norm.eval(1.0 / (2.0 * t))))
}

/// Which monotonicity failed in a quasi-concavity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeDefect {
    /// `ω` decreases between the probes.
    Decreasing,
    /// `ω(t)/t` increases between the probes.
    RatioIncreasing,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuasiConcavity {
    pub holds: bool,
    /// Adjacent probe pair where monotonicity fails.
    pub witness: Option<(f64, f64)>,
    pub defect: Option<ShapeDefect>,
}

impl QuasiConcavity {
    pub fn describe(&self) -> String {
        match (self.witness, self.defect) {
            (Some((a, b)), Some(ShapeDefect::Decreasing)) => {
                format!("omega decreases between t = {a} and t = {b}")
            }
            (Some((a, b)), Some(ShapeDefect::RatioIncreasing)) => {
                format!("omega(t)/t increases between t = {a} and t = {b}")
            }
            _ => "quasi-concave".into(),
        }
    }
}

/// Quasi-concavity of an evaluator on the given probes (sorted ascending).
pub(crate) fn quasiconcavity_on(f: impl Fn(f64) -> f64, probes: &[f64], slack: f64) -> QuasiConcavity {
    let vals: Vec<f64> = probes.iter().map(|&t| f(t)).collect();
    for i in 1..probes.len() {
        let (a, b) = (probes[i - 1], probes[i]);
        let (fa, fb) = (vals[i - 1], vals[i]);
        let defect = if fb < fa * (1.0 - slack) {
            Some(ShapeDefect::Decreasing)
        } else if fb / b > (fa / a) * (1.0 + slack) {
            Some(ShapeDefect::RatioIncreasing)
        } else {
            None
        };
        if defect.is_some() {
            return QuasiConcavity {
                holds: false,
                witness: Some((a, b)),
                defect,
            };
        }
    }
    QuasiConcavity {
        holds: true,
        witness: None,
        defect: None,
    }
}

/// Probe grid for shape checks: geometric over `[1e-6, 1e6]` plus any table knots.
pub(crate) fn shape_probes(norm: Option<&RealNorm>, per_decade: usize) -> Vec<f64> {
    let mut p = geometric_probes(1e-6, 1e6, per_decade);
    if let Some(n) = norm {
        p.extend(n.knots());
    }
    p.sort_by(f64::total_cmp);
    p.dedup();
    p
}

/// Checks that `ω` is increasing and `ω(t)/t` non-increasing on the probe grid.
pub fn is_quasiconcave(norm: &RealNorm, cfg: &TransformConfig) -> QuasiConcavity {
    let probes = shape_probes(Some(norm), cfg.probes_per_decade);
    quasiconcavity_on(|t| norm.eval(t), &probes, cfg.shape_slack)
}

/// Quasi-concavity of an arbitrary evaluator on the standard probe grid.
pub fn quasiconcavity_of(f: impl Fn(f64) -> f64, cfg: &TransformConfig) -> QuasiConcavity {
    quasiconcavity_on(f, &shape_probes(None, cfg.probes_per_decade), cfg.shape_slack)
}

/// `ω''(t)`: the dual transform applied twice. The inner transform runs on the
/// coarser `inner_grid_points` grid.
pub fn real_bidual(norm: &RealNorm, t: f64, cfg: &TransformConfig) -> Result<f64> {
    cfg.validate()?;
    norm.validate(cfg)?;
    check_t(t)?;
    Ok(bidual_unchecked(norm, t, cfg.grid_points, cfg))
}

fn bidual_unchecked(norm: &RealNorm, t: f64, outer_grid: usize, cfg: &TransformConfig) -> f64 {
    let inner = |u: f64| {
        dual_transform(|x| norm.eval(x), u, cfg.inner_grid_points, cfg.refinement_rounds)
    };
    dual_transform(inner, t, outer_grid, cfg.refinement_rounds)
}

/// Result of comparing `ω''` with `ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct BidualReport {
    pub input_quasiconcave: QuasiConcavity,
    /// `max |ω''(t) - ω(t)| / ω(t)` over the deviation probes.
    pub max_rel_deviation: f64,
    pub deviation_probes: Vec<f64>,
    /// `ω'' <= ω` (up to `rel_tol`) on the deviation probes.
    pub bidual_below: bool,
    /// Only computed when `ω` is not quasi-concave.
    pub envelope: Option<EnvelopeCheck>,
    /// Quasi-concave input: deviation within tolerance. Otherwise: bidual
    /// quasi-concave, below `ω`, and with the same dual within tolerance.
    pub ok: bool,
}

/// How the bidual of a non-quasi-concave norm relates to it.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeCheck {
    pub bidual_quasiconcave: QuasiConcavity,
    /// `max |(ω'')'(t) - ω'(t)| / ω'(t)` over `dual_probes`.
    pub dual_gap: f64,
    pub dual_probes: Vec<f64>,
}

/// Compares the numerical bidual with `ω`.
pub fn real_bidual_fixpoint(norm: &RealNorm, cfg: &TransformConfig) -> Result<BidualReport> {
    cfg.validate()?;
    norm.validate(cfg)?;
    let input_quasiconcave = is_quasiconcave(norm, cfg);

    let mut deviation_probes = geometric_probes(1e-2, 1e2, 6);
    deviation_probes.extend(norm.knots().into_iter().filter(|&k| (1e-2..=1e2).contains(&k)));
    deviation_probes.sort_by(f64::total_cmp);
    deviation_probes.dedup();

    let mut max_rel_deviation: f64 = 0.0;
    let mut bidual_below = true;
    for &t in &deviation_probes {
        let w = norm.eval(t);
        let b = bidual_unchecked(norm, t, cfg.grid_points, cfg);
        max_rel_deviation = max_rel_deviation.max((b - w).abs() / w);
        if b > w * (1.0 + cfg.rel_tol) {
            bidual_below = false;
        }
    }

    let envelope = (!input_quasiconcave.holds).then(|| envelope_check(norm, cfg));
    let ok = match &envelope {
        None => max_rel_deviation <= cfg.rel_tol,
        Some(e) => e.bidual_quasiconcave.holds && bidual_below && e.dual_gap <= cfg.rel_tol,
    };
    Ok(BidualReport {
        input_quasiconcave,
        max_rel_deviation,
        deviation_probes,
        bidual_below,
        envelope,
        ok,
    })
}

fn envelope_check(norm: &RealNorm, cfg: &TransformConfig) -> EnvelopeCheck {
    // Shape of the bidual on the full probe span, at a coarser density.
    let probes = shape_probes(Some(norm), 4);
    let bidual_quasiconcave = quasiconcavity_on(
        |t| bidual_unchecked(norm, t, cfg.inner_grid_points, cfg),
        &probes,
        cfg.shape_slack,
    );

    // Third dual against the first. All three levels use the inner grid.
    let dual_probes = vec![0.1, 0.3, 1.0, 2.0];
    let mut dual_gap: f64 = 0.0;
    for &t in &dual_probes {
        let first = dual_transform(|x| norm.eval(x), t, cfg.grid_points, cfg.refinement_rounds);
        let third = dual_transform(
            |u| bidual_unchecked(norm, u, cfg.inner_grid_points, cfg),
            t,
            cfg.inner_grid_points,
            cfg.refinement_rounds,
        );
        dual_gap = dual_gap.max((third - first).abs() / first);
    }
    EnvelopeCheck {
        bidual_quasiconcave,
        dual_gap,
        dual_probes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> RealNorm {
        RealNorm::Table {
            breakpoints: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 1.2), (3.0, 2.0)],
            tail_slope: 0.1,
        }
    }

    #[test]
    fn table_evaluation() {
        let w = fixture();
        assert_eq!(w.eval(0.5), 0.5);
        assert!((w.eval(2.5) - 1.6).abs() < 1e-15);
        assert!((w.eval(13.0) - 3.0).abs() < 1e-12);
        assert_eq!(w.eval(-1.0), 1.0);
    }

    #[test]
    fn validation() {
        let cfg = TransformConfig::default();
        assert!(fixture().validate(&cfg).is_ok());
        assert!(RealNorm::power(0.5).validate(&cfg).is_ok());
        assert!(RealNorm::Log1p { scale: 1.0 }.validate(&cfg).is_ok());
        assert!(RealNorm::power(1.5).validate(&cfg).is_err());
        assert!(RealNorm::Linear { slope: 0.0 }.validate(&cfg).is_err());
        let decreasing = RealNorm::Table {
            breakpoints: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 0.5)],
            tail_slope: 1.0,
        };
        let e = decreasing.validate(&cfg).unwrap_err().to_string();
        assert!(e.contains("not monotone"), "{e}");
        let superadditive = RealNorm::Table {
            breakpoints: vec![(0.0, 0.0), (1.0, 0.1), (2.0, 3.0)],
            tail_slope: 1.0,
        };
        let e = superadditive.validate(&cfg).unwrap_err().to_string();
        assert!(e.contains("not subadditive"), "{e}");
        let flat = RealNorm::Table {
            breakpoints: vec![(0.0, 0.0), (1.0, 1.0)],
            tail_slope: 0.0,
        };
        assert!(flat.validate(&cfg).unwrap_err().to_string().contains("not proper"));
    }

    #[test]
    fn quasiconcavity_examples() {
        let cfg = TransformConfig::default();
        assert!(is_quasiconcave(&RealNorm::power(0.3), &cfg).holds);
        assert!(is_quasiconcave(&RealNorm::power(1.0), &cfg).holds);
        assert!(is_quasiconcave(&RealNorm::Linear { slope: 2.5 }, &cfg).holds);
        let qc = is_quasiconcave(&fixture(), &cfg);
        assert!(!qc.holds);
        assert_eq!(qc.defect, Some(ShapeDefect::RatioIncreasing));
        let (a, b) = qc.witness.unwrap();
        assert!(a >= 2.0 && b <= 3.0 + 1e-12, "witness {a}..{b}");
    }

    #[test]
    fn dual_examples() {
        let cfg = TransformConfig::default();
        assert!((real_dual(&RealNorm::power(1.0), 3.0, &cfg).unwrap() - 3.0).abs() < 1e-12);
        assert!((real_dual(&RealNorm::power(0.5), 2.0, &cfg).unwrap() - 1.0).abs() < 1e-12);
        let c = real_dual_closed(&RealNorm::power(0.5), 0.5, &cfg).unwrap();
        assert!((c - 0.5).abs() < 1e-15);
        let log = RealNorm::Log1p { scale: 1.0 };
        let closed = real_dual_closed(&log, 1.0, &cfg).unwrap();
        assert!((closed - 1.0 / (2.0 * 0.5f64.ln_1p())).abs() < 1e-15);
        let numeric = real_dual(&log, 1.0, &cfg).unwrap();
        assert!((numeric - closed).abs() / closed < 1e-9);
        assert!(real_dual_closed(&fixture(), 1.0, &cfg).is_err());
        assert!(real_dual(&RealNorm::power(0.5), 0.0, &cfg).is_err());
        let small = real_dual(&RealNorm::power(0.5), 1e-8, &cfg).unwrap();
        assert!(small < 1e-3);
    }
}
