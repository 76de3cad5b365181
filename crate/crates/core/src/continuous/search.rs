// SPDX-License-Identifier: Apache-2.0

//! Suprema of one-variable functions on a half-open interval `(lo, hi]`.

/// Nodes per zoom round.
const ZOOM_POINTS: usize = 12;
/// Golden-section iterations in the final bracket.
const GOLDEN_ITERS: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct SupResult {
    pub value: f64,
    pub arg: f64,
}

struct Tracker<F> {
    f: F,
    best: SupResult,
}

impl<F: Fn(f64) -> f64> Tracker<F> {
    fn probe(&mut self, x: f64) -> f64 {
        let v = (self.f)(x);
        // NaN never wins; ties keep the earlier (leftmost-scanned) argument.
        if v > self.best.value {
            self.best = SupResult { value: v, arg: x };
        }
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    }
}

/// Local maxima of the scan refined at most.
const MAX_PEAKS: usize = 4;
/// Scan maxima within this relative distance of the best node are refined too,
/// since coarse sampling can undersell a narrow peak.
const PEAK_WINDOW: f64 = 0.05;

/// Maximises `f` over `(lo, hi]`.
///
/// A uniform scan of `grid` nodes (the first node is `lo + h`, the last is `hi`)
/// locates candidate cells: the local maxima of the scan whose values come close
/// to the best one. Around each candidate, `rounds` zoom scans rescan the
/// neighbourhood with finer spacing and a golden-section search polishes inside
/// the last bracket. The result is the best value ever evaluated, so it never
/// falls below any scanned node.
pub(crate) fn interval_sup(f: impl Fn(f64) -> f64, lo: f64, hi: f64, grid: usize, rounds: usize) -> SupResult {
    debug_assert!(hi > lo && grid > 0);
    let mut t = Tracker {
        f,
        best: SupResult {
            value: f64::NEG_INFINITY,
            arg: hi,
        },
    };
    let h = (hi - lo) / grid as f64;
    let nodes: Vec<f64> = (1..=grid)
        .map(|i| if i == grid { hi } else { lo + h * i as f64 })
        .collect();
    let vals: Vec<f64> = nodes.iter().map(|&x| t.probe(x)).collect();

    // Plateaus count once, at their right end.
    let mut peaks: Vec<usize> = (0..grid)
        .filter(|&i| (i == 0 || vals[i] >= vals[i - 1]) && (i + 1 == grid || vals[i] > vals[i + 1]))
        .collect();
    let top = t.best.value;
    let floor = top - PEAK_WINDOW * top.abs();
    peaks.retain(|&i| vals[i] >= floor);
    peaks.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]).then(a.cmp(&b)));
    peaks.truncate(MAX_PEAKS);
    if peaks.is_empty() {
        return t.best;
    }
    for i in peaks {
        refine(&mut t, (nodes[i], vals[i]), h, lo, hi, rounds);
    }
    t.best
}

fn refine<F: Fn(f64) -> f64>(
    t: &mut Tracker<F>,
    start: (f64, f64),
    h: f64,
    lo: f64,
    hi: f64,
    rounds: usize,
) {
    let (mut center, mut center_val) = start;
    let mut h = h;
    for _ in 0..rounds {
        let a = (center - h).max(lo);
        let b = (center + h).min(hi);
        let step = (b - a) / ZOOM_POINTS as f64;
        for k in 0..=ZOOM_POINTS {
            let x = if k == ZOOM_POINTS { b } else { a + step * k as f64 };
            if x > lo {
                let v = t.probe(x);
                if v > center_val {
                    center = x;
                    center_val = v;
                }
            }
        }
        h = step;
    }

    let (mut a, mut b) = ((center - h).max(lo), (center + h).min(hi));
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    if c <= lo {
        return;
    }
    let mut fc = t.probe(c);
    let mut fd = t.probe(d);
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            if c <= lo {
                break;
            }
            fc = t.probe(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = t.probe(d);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_peak() {
        let r = interval_sup(|x| -(x - 0.3137).powi(2), 0.0, 0.5, 64, 3);
        assert!((r.arg - 0.3137).abs() < 1e-6);
        assert!(r.value <= 0.0 && r.value > -1e-12);
    }

    #[test]
    fn kink_peak() {
        let r = interval_sup(|x| 1.0 - (x - 0.123456).abs(), 0.0, 0.5, 128, 3);
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn endpoint_is_scanned_exactly() {
        let r = interval_sup(|x| x, 0.0, 0.5, 10, 3);
        assert_eq!(r.value, 0.5);
        assert_eq!(r.arg, 0.5);
    }

    #[test]
    fn competing_peaks() {
        // A narrow kink peak between nodes and a broad endpoint peak of nearly
        // the same height: the narrow one must still be resolved.
        let narrow = |x: f64| 1.0 - 5.0 * (x - 0.1237).abs();
        let broad = |x: f64| 0.99 + 0.001 * x;
        let r = interval_sup(|x| narrow(x).max(broad(x)), 0.0, 0.5, 64, 3);
        assert!((r.value - 1.0).abs() < 1e-9, "{r:?}");
    }

    #[test]
    fn never_evaluates_left_endpoint() {
        let r = interval_sup(
            |x| {
                assert!(x > 0.0);
                -x
            },
            0.0,
            0.5,
            16,
            3,
        );
        assert!(r.value < 0.0 && r.value > -0.05);
    }
}
