// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use metric_duality::continuous::{
    is_quasiconcave, real_bidual, real_bidual_fixpoint, real_dual, t_dual_at, z_dual_at,
    RealNorm, TNorm, TransformConfig, ZNorm,
};
use metric_duality::ext::circle_distance;
use metric_duality::verify::{
    ball_bound_failures, ball_radii, draw_corpus, groups_up_to, run_property_suite,
    structure_corpus, VerifyConfig,
};
use metric_duality::structures::check_prop_metrstr;
use metric_duality::{make_group, rational, ExtValue, QuasiNorm, Rational};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dual of the discrete norm on `Z/n` at `a`, from the order of the character.
fn discrete_dual_oracle(n: u64, a: u64) -> Rational {
    let k = n / gcd(a, n);
    if k % 2 == 0 {
        rational(1, 2)
    } else {
        rational(k as i128 - 1, 2 * k as i128)
    }
}

fn discrete_duals() -> Outcome {
    for n in [12u64, 9] {
        let g = make_group(&[n]).unwrap();
        let d = QuasiNorm::discrete(&g).dual();
        for a in 0..n {
            let got = d.value_at(&[a]).unwrap();
            let want = ExtValue::Finite(discrete_dual_oracle(n, a));
            if got != want {
                return fail(format!("Z/{n} at {a}: got {got}, want {want}"));
            }
        }
    }
    pass("Z/12 and Z/9, every character")
}

fn regularisation_bounds() -> Outcome {
    let g = make_group(&[9]).unwrap();
    let reg = QuasiNorm::discrete(&g).regularise();
    // Exhaustive oracle: max over nontrivial characters of λ(a·x/9) / δ#(a).
    let oracle = |x: u64| {
        (1..9u64)
            .filter(|a| (a * x) % 9 != 0)
            .map(|a| circle_distance(rational((a * x) as i128, 9)) / discrete_dual_oracle(9, a))
            .max()
            .unwrap()
    };
    for x in [3u64, 6] {
        let got = reg.value_at(&[x]).unwrap();
        let want = oracle(x);
        if got != ExtValue::Finite(rational(3, 4)) || want != rational(3, 4) {
            return fail(format!("x = {x}: got {got}, oracle {want}"));
        }
        let v = want;
        if !(v >= rational(2, 3) && v <= rational(5, 6) && v != rational(1, 1)) {
            return fail(format!("x = {x}: {v} outside [2/3, 5/6]"));
        }
    }
    pass("regularise(discrete)(3) = regularise(discrete)(6) = 3/4")
}

fn property_suite() -> Outcome {
    let cfg = VerifyConfig {
        max_order: 64,
        draws: 100,
        seed: 20_240_601,
    };
    let report = run_property_suite(&cfg).unwrap();
    if let Some(v) = report.violations.first() {
        return fail(format!("{} violations, first: {v}", report.violations.len()));
    }
    if report.groups.iter().any(|g| g.draws < 100) {
        return fail("fewer than 100 draws for some group");
    }
    pass(format!(
        "{} groups, {} checks, 0 violations",
        report.groups.len(),
        report.checks
    ))
}

fn involution() -> Outcome {
    let mut regulars = 0;
    for g in groups_up_to(64) {
        let corpus = draw_corpus(&g, 100, 7);
        let mut seen: Vec<(Vec<ExtValue>, Vec<ExtValue>)> = Vec::new();
        let mut candidates: Vec<QuasiNorm> = Vec::new();
        for q in corpus {
            candidates.push(q.regularise());
            candidates.push(q);
        }
        for q in candidates {
            if !q.is_regular().is_regular {
                continue;
            }
            regulars += 1;
            if q.bidual() != q {
                return fail(format!("bidual differs on Z/{:?}: {q:?}", g.moduli()));
            }
            let dual = q.dual().values().to_vec();
            for (d, v) in &seen {
                if *d == dual && v.as_slice() != q.values() {
                    return fail(format!("two regulars on Z/{:?} share a dual", g.moduli()));
                }
            }
            seen.push((dual, q.values().to_vec()));
        }
    }
    pass(format!("{regulars} regular tables, bidual = identity, dual injective"))
}

fn circle_integers() -> Outcome {
    let cfg = TransformConfig::default();
    let abs = ZNorm::abs();
    let mut angles = 0;
    for den in 1..=64i128 {
        for num in 0..=den / 2 {
            let theta = rational(num, den);
            let d = z_dual_at(&abs, theta, &cfg).unwrap();
            let want = circle_distance(theta);
            let got = if d.argmax == 0 {
                Rational::from_integer(0)
            } else {
                d.lambda / Rational::from_integer(d.argmax as i128)
            };
            if got != want {
                return fail(format!("theta = {theta}: got {got}, want {want}"));
            }
            angles += 1;
        }
    }
    let lambda = TNorm::lambda();
    for k in -16i64..=16 {
        let got = t_dual_at(&lambda, k, &cfg).unwrap();
        let want = k.abs() as f64;
        let ok = if k == 0 {
            got == 0.0
        } else {
            ((got - want) / want).abs() <= 1e-6
        };
        if !ok {
            return fail(format!("k = {k}: got {got}"));
        }
    }
    pass(format!("{angles} rational angles exact, |k| <= 16 within 1e-6"))
}

fn real_line() -> Outcome {
    let cfg = TransformConfig::default();
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    for j in -2..=2 {
        let t = 10f64.powi(j);
        let got = real_dual(&RealNorm::power(1.0), t, &cfg).unwrap();
        if rel(got, t) > 1e-9 {
            return fail(format!("power(1) at {t}: {got}"));
        }
    }
    let mut worst_bidual: f64 = 0.0;
    for alpha in [0.3, 0.5, 0.9] {
        let w = RealNorm::power(alpha);
        for j in -2..=2 {
            let t = 10f64.powi(j);
            let want = 2f64.powf(alpha - 1.0) * t.powf(alpha);
            let got = real_dual(&w, t, &cfg).unwrap();
            if rel(got, want) > 1e-6 {
                return fail(format!("power({alpha}) at {t}: {got} vs {want}"));
            }
        }
        let report = real_bidual_fixpoint(&w, &cfg).unwrap();
        worst_bidual = worst_bidual.max(report.max_rel_deviation);
        if report.max_rel_deviation > 1e-5 {
            return fail(format!("power({alpha}) bidual deviation {}", report.max_rel_deviation));
        }
    }
    let fixture = RealNorm::Table {
        breakpoints: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 1.2), (3.0, 2.0)],
        tail_slope: 0.1,
    };
    if is_quasiconcave(&fixture, &cfg).holds {
        return fail("table fixture reported quasi-concave");
    }
    let report = real_bidual_fixpoint(&fixture, &cfg).unwrap();
    let Some(envelope) = &report.envelope else {
        return fail("no envelope check for the table fixture");
    };
    if !envelope.bidual_quasiconcave.holds || !report.bidual_below || envelope.dual_gap > 1e-5 {
        return fail(format!("table fixture bidual: {report:?}"));
    }
    // Largest quasi-concave minorant: t · min_{v <= t} ω(v)/v, which is 1.5 at 2.5.
    let b = real_bidual(&fixture, 2.5, &cfg).unwrap();
    if rel(b, 1.5) > 1e-5 || b >= fixture.eval(2.5) {
        return fail(format!("table fixture bidual at 2.5: {b}"));
    }
    pass(format!(
        "power duals within tolerance, bidual deviation {worst_bidual:.1e}, fixture dual gap {:.1e}",
        envelope.dual_gap
    ))
}

fn ball_bound() -> Outcome {
    let radii = ball_radii();
    let mut tables = 0;
    for g in groups_up_to(32) {
        for q in draw_corpus(&g, 50, 11) {
            tables += 1;
            let failures = ball_bound_failures(&q, &radii);
            if !failures.is_empty() {
                return fail(format!("Z/{:?}: {failures:?} for {q:?}", g.moduli()));
            }
        }
    }
    pass(format!("{tables} tables, all characters, 4 radii, 0 violations"))
}

fn structures() -> Outcome {
    let corpus = structure_corpus(64, 8, 5);
    if corpus.len() < 200 {
        return fail(format!("only {} structures generated", corpus.len()));
    }
    let mut holding = 0;
    for p in &corpus {
        let r = check_prop_metrstr(p).unwrap();
        if !r.consistent {
            return fail(format!("{r:?} for {:?}", p.members()));
        }
        holding += usize::from(r.condition_i);
    }
    pass(format!(
        "{} structures consistent ({holding} satisfy all three, {} none)",
        corpus.len(),
        corpus.len() - holding
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("discrete-norm dual values", Duration::from_secs(1), discrete_duals),
        ("regularisation of the discrete norm on Z/9", Duration::from_secs(1), regularisation_bounds),
        ("property suite, |G| <= 64, 100 draws", Duration::from_secs(60), property_suite),
        ("bidual involution and dual injectivity", Duration::from_secs(60), involution),
        ("duals between Z and the circle", Duration::from_secs(5), circle_integers),
        ("dual transforms on the real line", Duration::from_secs(10), real_line),
        ("Lipschitz ball bound oracle", Duration::from_secs(120), ball_bound),
        ("structure equivalences", Duration::from_secs(30), structures),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > *limit {
            outcome = fail(format!("{} (took {elapsed:.2?}, limit {limit:?})", outcome.detail));
        }
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {name} [{elapsed:.2?}] {}",
            i + 1,
            outcome.detail
        );
        failed += usize::from(!outcome.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
