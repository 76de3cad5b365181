// SPDX-License-Identifier: Apache-2.0

//! Norms on the integers and on the circle, and the duals between them.
//!
//! The characters of `Z` are the points of `T = R/Z` and vice versa, so a norm on
//! one side has a dual on the other:
//!
//! ```text
//! Z → T:  p'(θ) = sup_{k ≠ 0} λ(kθ) / p(k)
//! T → Z:  p'(k) = sup_{θ ∈ (0, 1/2]} λ(kθ) / p(θ)
//! ```

use num_integer::Integer;
use num_traits::Zero;

use super::search::interval_sup;
use super::TransformConfig;
use crate::error::{Error, Result};
use crate::ext::{circle_distance, Rational};

/// A symmetric norm on `Z`, given on `k >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum ZNorm {
    /// `scale·|k|`.
    Abs { scale: f64 },
    /// `scale·|k|^α`, `0 < α <= 1`.
    Power { alpha: f64, scale: f64 },
    /// `values[k]` for `k < values.len()`, then linear with `tail_slope`.
    Table { values: Vec<f64>, tail_slope: f64 },
}

impl ZNorm {
    pub fn abs() -> Self {
        ZNorm::Abs { scale: 1.0 }
    }

    pub fn eval(&self, k: i64) -> f64 {
        let k = k.unsigned_abs();
        match self {
            ZNorm::Abs { scale } => scale * k as f64,
            ZNorm::Power { alpha, scale } => scale * (k as f64).powf(*alpha),
            ZNorm::Table { values, tail_slope } => {
                let n = values.len() as u64;
                if k < n {
                    values[k as usize]
                } else {
                    values[n as usize - 1] + tail_slope * (k - n + 1) as f64
                }
            }
        }
    }

    /// `min_{|k| > bound} p(k)`.
    pub fn lower_envelope(&self, bound: u64) -> f64 {
        match self {
            ZNorm::Abs { .. } | ZNorm::Power { .. } => self.eval(bound as i64 + 1),
            ZNorm::Table { values, .. } => {
                let tail_start = values.len() as u64;
                let beyond = self.eval(tail_start.max(bound + 1) as i64);
                if bound + 1 >= tail_start {
                    return beyond;
                }
                values[(bound + 1) as usize..]
                    .iter()
                    .copied()
                    .fold(beyond, f64::min)
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ZNorm::Abs { scale } | ZNorm::Power { scale, .. } => {
                if !(*scale > 0.0 && scale.is_finite()) {
                    return Err(Error::input(format!("scale {scale} must be positive")));
                }
                if let ZNorm::Power { alpha, .. } = self {
                    if !(*alpha > 0.0 && *alpha <= 1.0) {
                        return Err(Error::input(format!("exponent {alpha} must lie in (0, 1]")));
                    }
                }
            }
            ZNorm::Table { values, tail_slope } => {
                if values.first() != Some(&0.0) {
                    return Err(Error::input("a table must start with value 0 at k = 0"));
                }
                if let Some((k, v)) = values
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
                {
                    return Err(Error::input(format!("p({k}) = {v} must be positive")));
                }
                if !(*tail_slope > 0.0 && tail_slope.is_finite()) {
                    return Err(Error::input(format!(
                        "not proper: tail slope {tail_slope} must be positive"
                    )));
                }
                let span = (2 * values.len() as i64).max(64);
                for a in 1..=span {
                    for b in a..=span {
                        let (lhs, rhs) = (self.eval(a + b), self.eval(a) + self.eval(b));
                        if lhs > rhs * (1.0 + 1e-12) {
                            return Err(Error::input(format!(
                                "not subadditive: p({a} + {b}) = {lhs} > {rhs}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Value of the `Z → T` dual at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct ZDual {
    pub value: f64,
    /// Smallest `k > 0` attaining the supremum; `0` when `θ` is an integer.
    pub argmax: u64,
    /// `λ(argmax·θ)`, exactly.
    pub lambda: Rational,
    /// Terms examined before the tail bound closed the search.
    pub terms: u64,
}

/// `sup_{k ≠ 0} λ(kθ)/p(k)` at a rational angle, with rigorous truncation.
///
/// Every term with `|k| > K` is at most `1/(2·min_{|k|>K} p(k))`, so the scan stops
/// once that bound falls strictly below the best term found. Comparisons between
/// terms are exact cross-multiplications when `p` is integer-valued.
pub fn z_dual_at(p: &ZNorm, theta: Rational, cfg: &TransformConfig) -> Result<ZDual> {
    p.validate()?;
    let frac = theta - theta.floor();
    if frac.is_zero() {
        return Ok(ZDual {
            value: 0.0,
            argmax: 0,
            lambda: Rational::zero(),
            terms: 0,
        });
    }
    let (num, den) = (*frac.numer(), *frac.denom());
    // λ(kθ) = min(r, den − r)/den with r = k·num mod den.
    let lambda_num = |k: u64| {
        let r = (i128::from(k) * num).mod_floor(&den);
        r.min(den - r)
    };
    let mut best_k = 1u64;
    let mut best_num = lambda_num(1);
    let mut best_p = p.eval(1);
    let mut k = 1u64;
    loop {
        // Terms beyond k are at most (1/2)/envelope(k) < best.
        let envelope = p.lower_envelope(k);
        if envelope * 2.0 * (best_num as f64) > (den as f64) * best_p {
            break;
        }
        if k >= cfg.max_terms {
            return Err(Error::input(format!(
                "not proper: no tail bound after {k} terms"
            )));
        }
        k += 1;
        let n = lambda_num(k);
        let pk = p.eval(k as i64);
        if (n as f64) * best_p > (best_num as f64) * pk {
            best_k = k;
            best_num = n;
            best_p = pk;
        }
    }
    let lambda = Rational::new(best_num, den);
    Ok(ZDual {
        value: (best_num as f64 / den as f64) / best_p,
        argmax: best_k,
        lambda,
        terms: k,
    })
}

/// A symmetric norm on the circle, given on `[0, 1/2]`.
#[derive(Clone, Debug, PartialEq)]
pub enum TNorm {
    /// `scale·λ`.
    Lambda { scale: f64 },
    /// Linear interpolation of `samples[i]` at `θ = i / (2·(samples.len() − 1))`.
    Table { samples: Vec<f64> },
}

fn fold(theta: f64) -> f64 {
    let x = theta.rem_euclid(1.0);
    x.min(1.0 - x)
}

impl TNorm {
    pub fn lambda() -> Self {
        TNorm::Lambda { scale: 1.0 }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let x = fold(theta);
        match self {
            TNorm::Lambda { scale } => scale * x,
            TNorm::Table { samples } => {
                let m = (samples.len() - 1) as f64;
                let pos = x * 2.0 * m;
                let i = (pos.floor() as usize).min(samples.len() - 2);
                let w = pos - i as f64;
                samples[i] * (1.0 - w) + samples[i + 1] * w
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            TNorm::Lambda { scale } => {
                if !(*scale > 0.0 && scale.is_finite()) {
                    return Err(Error::input(format!("scale {scale} must be positive")));
                }
            }
            TNorm::Table { samples } => {
                if samples.len() < 2 {
                    return Err(Error::input("a circle table needs at least two samples"));
                }
                if samples[0] != 0.0 {
                    return Err(Error::input("p(0) must be 0"));
                }
                if let Some((i, v)) = samples
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
                {
                    return Err(Error::input(format!("sample {i} = {v} must be positive")));
                }
                // Subadditivity at the sample angles under addition mod 1.
                let m = samples.len() - 1;
                let step = 1.0 / (2 * m) as f64;
                for a in 1..=2 * m {
                    for b in a..=2 * m {
                        let (x, y) = (a as f64 * step, b as f64 * step);
                        let (lhs, rhs) = (self.eval(x + y), self.eval(x) + self.eval(y));
                        if lhs > rhs * (1.0 + 1e-12) {
                            return Err(Error::input(format!(
                                "not subadditive: p({x} + {y}) = {lhs} > {rhs}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `sup_{θ ∈ (0, 1/2]} λ(kθ)/p(θ)` by grid scan with refinement.
pub fn t_dual_at(p: &TNorm, k: i64, cfg: &TransformConfig) -> Result<f64> {
    cfg.validate()?;
    p.validate()?;
    if k == 0 {
        return Ok(0.0);
    }
    let kf = k.abs() as f64;
    let r = interval_sup(
        |theta| fold(kf * theta) / p.eval(theta),
        0.0,
        0.5,
        cfg.grid_points,
        cfg.refinement_rounds,
    );
    Ok(r.value)
}

/// Exact `λ(θ)` for a rational angle.
pub fn lambda_of(theta: Rational) -> Rational {
    circle_distance(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::rational;

    #[test]
    fn z_to_t_examples() {
        let cfg = TransformConfig::default();
        let d = z_dual_at(&ZNorm::abs(), rational(1, 3), &cfg).unwrap();
        assert_eq!(d.lambda, rational(1, 3));
        assert_eq!(d.value, 1.0 / 3.0);
        assert_eq!(d.argmax, 1);
        let d = z_dual_at(&ZNorm::abs(), rational(1, 2), &cfg).unwrap();
        assert_eq!(d.value, 0.5);
        assert_eq!(z_dual_at(&ZNorm::abs(), rational(0, 1), &cfg).unwrap().value, 0.0);
        assert_eq!(z_dual_at(&ZNorm::abs(), rational(5, 1), &cfg).unwrap().value, 0.0);
        let d = z_dual_at(&ZNorm::abs(), rational(-1, 3), &cfg).unwrap();
        assert_eq!(d.lambda, rational(1, 3));
    }

    #[test]
    fn z_scaling() {
        let cfg = TransformConfig::default();
        let p = ZNorm::Abs { scale: 2.0 };
        let d = z_dual_at(&p, rational(2, 7), &cfg).unwrap();
        assert!((d.value - (2.0 / 7.0) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn z_table_envelope() {
        let p = ZNorm::Table {
            values: vec![0.0, 1.0, 1.5, 1.8],
            tail_slope: 0.5,
        };
        assert!(p.validate().is_ok());
        assert_eq!(p.lower_envelope(0), 1.0);
        assert_eq!(p.lower_envelope(2), 1.8);
        assert_eq!(p.lower_envelope(3), 2.3);
        assert_eq!(p.eval(-4), 2.3);
        let flat = ZNorm::Table {
            values: vec![0.0, 1.0],
            tail_slope: 0.0,
        };
        assert!(flat.validate().is_err());
    }

    #[test]
    fn z_power_needs_many_terms() {
        // Sublinear growth: the sup at 1/5 is not attained at k = 1.
        let cfg = TransformConfig::default();
        let p = ZNorm::Power {
            alpha: 0.5,
            scale: 1.0,
        };
        let d = z_dual_at(&p, rational(1, 5), &cfg).unwrap();
        let brute = (1..2000)
            .map(|k: i64| lambda_of(rational(i128::from(k), 5)))
            .zip(1..2000)
            .map(|(l, k)| (*l.numer() as f64 / *l.denom() as f64) / (k as f64).sqrt())
            .fold(0.0, f64::max);
        assert!((d.value - brute).abs() < 1e-15, "{} vs {}", d.value, brute);
        assert_eq!(d.argmax, 2);
    }

    #[test]
    fn t_to_z_examples() {
        let cfg = TransformConfig::default();
        let v = t_dual_at(&TNorm::lambda(), 2, &cfg).unwrap();
        assert!((v - 2.0).abs() < 1e-6);
        assert_eq!(t_dual_at(&TNorm::lambda(), 0, &cfg).unwrap(), 0.0);
        let v = t_dual_at(&TNorm::Lambda { scale: 4.0 }, -3, &cfg).unwrap();
        assert!((v - 0.75).abs() < 1e-6);
    }

    #[test]
    fn t_table() {
        let p = TNorm::Table {
            samples: vec![0.0, 0.25, 0.5],
        };
        assert!(p.validate().is_ok());
        assert!((p.eval(0.75) - 0.25).abs() < 1e-15);
        let bad = TNorm::Table {
            samples: vec![0.0, 0.01, 0.5],
        };
        assert!(bad.validate().is_err());
    }
}
