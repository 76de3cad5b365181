// SPDX-License-Identifier: Apache-2.0

//! Exhaustive law checks over generated quasi-norms on small groups.
//!
//! Every check is exact. A violation is always an engine defect; the report
//! carries enough of the tables to reproduce it.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{FiniteAbelianGroup, Subgroup};
use crate::error::{Error, Result};
use crate::ext::{rational, ExtValue, Rational};
use crate::quasinorm::{join, meet, product, random_quasinorm, QuasiNorm};
use crate::structures::{check_prop_metrstr, check_structure, dual_structure, MetricStructure};

/// Moduli of the groups the suite runs on, in increasing order of size.
pub const GROUP_LIST: &[&[u64]] = &[
    &[1],
    &[2],
    &[3],
    &[4],
    &[2, 2],
    &[5],
    &[6],
    &[7],
    &[8],
    &[2, 4],
    &[2, 2, 2],
    &[9],
    &[3, 3],
    &[10],
    &[12],
    &[2, 6],
    &[15],
    &[16],
    &[4, 4],
    &[2, 2, 4],
    &[2, 9],
    &[27],
    &[3, 9],
    &[5, 5],
    &[32],
    &[2, 4, 4],
    &[36],
    &[6, 6],
    &[7, 7],
    &[64],
    &[8, 8],
    &[4, 4, 4],
    &[2, 2, 2, 2, 2, 2],
];

/// Groups from [`GROUP_LIST`] with order at most `max_order`.
pub fn groups_up_to(max_order: usize) -> Vec<FiniteAbelianGroup> {
    GROUP_LIST
        .iter()
        .map(|m| FiniteAbelianGroup::new(m).expect("listed moduli are valid"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

fn pools() -> Vec<Vec<ExtValue>> {
    let f = |n, d| ExtValue::Finite(rational(n, d));
    let inf = ExtValue::Infinity;
    vec![
        vec![f(1, 2), f(1, 1), f(3, 2), f(2, 1)],
        vec![f(1, 1), inf],
        vec![f(1, 3), f(1, 1), inf, f(0, 1)],
        vec![f(1, 1), f(2, 1), f(3, 1), f(5, 4)],
        vec![f(0, 1), f(1, 1)],
        vec![f(1, 4), f(7, 3), inf],
        vec![f(2, 5), f(3, 5), f(1, 1), f(9, 5), inf, inf],
        vec![f(1, 1)],
        vec![inf],
    ]
}

/// Deterministic quasi-norm draws for one group.
pub fn draw_corpus(group: &FiniteAbelianGroup, draws: usize, seed: u64) -> Vec<QuasiNorm> {
    let pools = pools();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..draws)
        .map(|i| {
            let pool = &pools[i % pools.len()];
            random_quasinorm(group, rng.gen(), pool).expect("closure of a pool draw validates")
        })
        .collect()
}

fn group_seed(seed: u64, group: &FiniteAbelianGroup) -> u64 {
    group
        .moduli()
        .iter()
        .fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, &m| {
            h.rotate_left(13).wrapping_mul(0x100_0000_01b3) ^ m
        })
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_order: usize,
    pub draws: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: 64,
            draws: 100,
            seed: 0,
        }
    }
}

/// A failed law, with the inputs that exhibit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub group: Vec<u64>,
    pub law: &'static str,
    pub operation: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on Z/{:?}: {}: {}",
            self.law, self.group, self.operation, self.detail
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub moduli: Vec<u64>,
    pub draws: usize,
    pub regular_draws: usize,
    pub structures: usize,
    pub checks: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub groups: Vec<GroupSummary>,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Recorder {
    moduli: Vec<u64>,
    checks: u64,
    violations: Vec<Violation>,
}

impl Recorder {
    fn check(&mut self, ok: bool, law: &'static str, operation: &str, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                group: self.moduli.clone(),
                law,
                operation: operation.to_string(),
                detail: detail(),
            });
        }
    }

    fn eq(&mut self, law: &'static str, operation: &str, expected: &QuasiNorm, got: &QuasiNorm) {
        let ok = expected.values() == got.values();
        self.check(ok, law, operation, || {
            format!("expected {expected:?}, got {got:?}")
        });
    }

    fn le(&mut self, law: &'static str, operation: &str, lower: &QuasiNorm, upper: &QuasiNorm) {
        let ok = pointwise_le(lower, upper);
        self.check(ok, law, operation, || {
            format!("{lower:?} is not below {upper:?}")
        });
    }

    fn regular(&mut self, law: &'static str, operation: &str, q: &QuasiNorm) {
        let r = q.is_regular();
        self.check(r.is_regular, law, operation, || {
            format!("{q:?} is not regular: {:?}", r.witness)
        });
    }

    fn fail(&mut self, law: &'static str, operation: &str, err: Error) {
        self.check(false, law, operation, || format!("unexpected error: {err}"));
    }
}

fn pointwise_le(a: &QuasiNorm, b: &QuasiNorm) -> bool {
    a.values().iter().zip(b.values()).all(|(x, y)| x <= y)
}

fn point_set(h: &Subgroup) -> Vec<Vec<u64>> {
    let mut v: Vec<Vec<u64>> = h.elements().iter().map(|x| x.residues().to_vec()).collect();
    v.sort();
    v
}

/// Runs every law over every listed group of order at most `max_order`.
pub fn run_property_suite(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.max_order == 0 || cfg.draws == 0 {
        return Err(Error::input("order bound and draw count must be positive"));
    }
    let mut groups = Vec::new();
    let mut checks = 0;
    let mut violations = Vec::new();
    for g in groups_up_to(cfg.max_order) {
        let mut rec = Recorder {
            moduli: g.moduli().to_vec(),
            checks: 0,
            violations: Vec::new(),
        };
        let summary = verify_group(&g, cfg, &mut rec);
        checks += rec.checks;
        violations.append(&mut rec.violations);
        groups.push(GroupSummary {
            checks: rec.checks,
            ..summary
        });
    }
    Ok(VerifyReport {
        groups,
        checks,
        violations,
    })
}

/// One draw with its derived tables, computed once.
struct Drawn {
    q: QuasiNorm,
    dual: QuasiNorm,
    reg: QuasiNorm,
}

fn verify_group(g: &FiniteAbelianGroup, cfg: &VerifyConfig, rec: &mut Recorder) -> GroupSummary {
    let seed = group_seed(cfg.seed, g);
    let corpus = draw_corpus(g, cfg.draws, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(7));
    let drawn: Vec<Drawn> = corpus
        .into_iter()
        .map(|q| {
            let dual = q.dual();
            let reg = q.regularise();
            Drawn { q, dual, reg }
        })
        .collect();

    check_trivial(g, rec);
    let mut regular_draws = 0;
    let mut dual_of_regular: HashMap<Vec<ExtValue>, Vec<ExtValue>> = HashMap::new();
    for (i, d) in drawn.iter().enumerate() {
        let next = &drawn[(i + 1) % drawn.len()];
        check_single(g, d, rec);
        check_pair(d, next, rec);
        check_subgroups(g, d, &mut rng, rec);
        check_dual_side_restriction(g, d, &mut rng, rec);
        check_lattice(g, d, next, rec);
        check_ball_bound(d, rec);
        if d.q.values() == d.reg.values() {
            regular_draws += 1;
        }
        for r in [&d.reg, &d.q] {
            if r.values() != d.reg.values() {
                continue;
            }
            let dual = d.dual.values().to_vec();
            match dual_of_regular.get(&dual) {
                Some(prev) => rec.check(prev == r.values(), "dual injective on regulars", "dual", || {
                    format!("{:?} and {:?} share the dual {:?}", prev, r.values(), dual)
                }),
                None => {
                    dual_of_regular.insert(dual, r.values().to_vec());
                }
            }
        }
    }
    let regulars: Vec<QuasiNorm> = drawn.iter().map(|d| d.reg.clone()).collect();
    let mut structures = 0;
    for _ in 0..cfg.draws.div_ceil(4) {
        if let Some(p) = random_structure(&regulars, &mut rng) {
            structures += 1;
            check_structure_laws(&p, rec);
        }
    }
    GroupSummary {
        moduli: g.moduli().to_vec(),
        draws: cfg.draws,
        regular_draws,
        structures,
        checks: 0,
    }
}

fn check_trivial(g: &FiniteAbelianGroup, rec: &mut Recorder) {
    let zero = QuasiNorm::zero(g);
    let inf = QuasiNorm::infinite(g);
    let mut dz = inf.values().to_vec();
    dz[0] = ExtValue::ZERO;
    rec.check(zero.dual().values() == dz.as_slice(), "trivial", "dual(zero)", || {
        format!("{:?}", zero.dual())
    });
    rec.eq("trivial", "dual(infinite)", &zero, &inf.dual());
    rec.eq("trivial", "regularise(zero)", &zero, &zero.regularise());
    rec.eq("trivial", "regularise(infinite)", &inf, &inf.regularise());
    let delta = QuasiNorm::discrete(g);
    rec.eq("trivial", "meet(discrete)", &delta.regularise(), &meet(&[delta.clone()]).unwrap());
}

fn check_single(g: &FiniteAbelianGroup, d: &Drawn, rec: &mut Recorder) {
    let Drawn { q, dual, reg } = d;
    rec.check(q.validate().is_ok(), "generator", "random_quasinorm", || format!("{q:?}"));
    rec.le("contraction", "regularise(q) <= q", reg, q);
    rec.eq("idempotence", "regularise(regularise(q))", reg, &reg.regularise());
    rec.eq("idempotence", "dual(regularise(q))", dual, &reg.dual());
    rec.regular("dual regularity", "dual(q)", dual);
    rec.check(dual.validate().is_ok(), "dual regularity", "dual(q) axioms", || format!("{dual:?}"));
    rec.eq("regularisation formula", "regularise_formula(q)", reg, &q.regularise_formula());
    rec.eq("bidual indexing", "dual(dual(q))", &q.bidual(), &dual.dual());
    rec.eq("involution", "bidual(regularise(q))", reg, &reg.bidual());
    let report = q.is_regular();
    rec.check(
        report.is_reflexive == report.is_regular && report.evaluation_bijective,
        "involution",
        "is_reflexive",
        || format!("{report:?}"),
    );
    rec.check(
        report.is_regular || report.witness.as_ref().is_some_and(|w| w.value != w.regularised),
        "regularity witness",
        "is_regular",
        || format!("{report:?}"),
    );

    // Pullback of the dual of a quasi-norm on the character group.
    match QuasiNorm::from_values(g, dual.values().to_vec()) {
        Ok(tau) => match QuasiNorm::from_values(g, tau.dual().values().to_vec()) {
            Ok(pulled) => rec.regular("pullback regularity", "dual(tau) o J", &pulled),
            Err(e) => rec.fail("pullback regularity", "dual(tau) o J", e),
        },
        Err(e) => rec.fail("pullback regularity", "tau", e),
    }

    for c in [rational(1, 2), rational(3, 1), rational(2, 3)] {
        let scaled = q.scale(c).expect("positive factor");
        let expected = dual.scale(c.recip()).expect("positive factor");
        rec.eq("scaling", &format!("dual(scale(q, {c}))"), &expected, &scaled.dual());
    }

    // Kernel law.
    match (dual.kernel(), q.fin_part(), dual.fin_part(), q.kernel()) {
        (Ok(kd), Ok(fq), Ok(fd), Ok(kq)) => {
            let mut ann: Vec<Vec<u64>> = fq.annihilator().iter().map(|a| a.coeffs().to_vec()).collect();
            ann.sort();
            rec.check(point_set(&kd) == ann, "kernel law", "ker(dual q) = fin(q)^perp", || {
                format!("ker {:?} vs annihilator {:?} for {q:?}", point_set(&kd), ann)
            });
            let mut ann: Vec<Vec<u64>> = kq.annihilator().iter().map(|a| a.coeffs().to_vec()).collect();
            ann.sort();
            rec.check(point_set(&fd) == ann, "kernel law", "fin(dual q) = ker(q)^perp", || {
                format!("fin {:?} vs annihilator {:?} for {q:?}", point_set(&fd), ann)
            });
        }
        _ => rec.check(false, "kernel law", "kernel/fin_part", || format!("{q:?}")),
    }

    // Trivial bounds.
    rec.le("trivial", "zero <= q", &QuasiNorm::zero(g), q);
    rec.le("trivial", "q <= infinite", q, &QuasiNorm::infinite(g));
    match join(&[q.clone(), QuasiNorm::zero(g)]) {
        Ok(j) => rec.eq("trivial", "join(q, zero)", q, &j),
        Err(e) => rec.fail("trivial", "join(q, zero)", e),
    }
    match meet(&[q.clone(), QuasiNorm::infinite(g)]) {
        Ok(m) => rec.eq("trivial", "meet(q, infinite)", reg, &m),
        Err(e) => rec.fail("trivial", "meet(q, infinite)", e),
    }
}

fn check_pair(a: &Drawn, b: &Drawn, rec: &mut Recorder) {
    // A comparable pair: q <= join(q, s).
    let upper = join(&[a.q.clone(), b.q.clone()]).expect("same group");
    rec.le("monotone", "regularise(q) <= regularise(join)", &a.reg, &upper.regularise());
    rec.le("antitone", "dual(join) <= dual(q)", &upper.dual(), &a.dual);

    // Order reversal on regulars, both directions, on a possibly incomparable pair.
    for (x, y, dx, dy) in [
        (&a.reg, &b.reg, &a.dual, &b.dual),
        (&b.reg, &a.reg, &b.dual, &a.dual),
    ] {
        let primal = pointwise_le(x, y);
        let dual = pointwise_le(dy, dx);
        rec.check(primal == dual, "order reversal", "q <= r iff dual(r) <= dual(q)", || {
            format!("q = {x:?}, r = {y:?}: q <= r is {primal}, dual order is {dual}")
        });
    }
}

fn check_subgroups(g: &FiniteAbelianGroup, d: &Drawn, rng: &mut ChaCha8Rng, rec: &mut Recorder) {
    let n = g.order();
    let x = g.element_at(rng.gen_range(0..n));
    let y = g.element_at(rng.gen_range(0..n));
    let mut subgroups = vec![
        Subgroup::generate(g, &[]).expect("trivial subgroup"),
        Subgroup::generate(g, std::slice::from_ref(&x)).expect("cyclic subgroup"),
        Subgroup::generate(g, &[x, y]).expect("subgroup"),
        Subgroup::full(g),
    ];
    subgroups.extend(d.reg.kernel().ok());
    subgroups.extend(d.reg.fin_part().ok());
    for h in &subgroups {
        let op = format!("restrict(regularise(q), {} elements)", h.order());
        match d.reg.restrict(h) {
            Ok(r) => {
                rec.regular("subgroup stability", &op, &r);
                rec.eq("regularisation formula", &op, &r.regularise(), &r.regularise_formula());
            }
            Err(e) => rec.fail("subgroup stability", &op, e),
        }
    }
}

/// Regularisation through a restriction of the dual to a subgroup of the
/// character group that contains `fin(dual q)`.
fn check_dual_side_restriction(g: &FiniteAbelianGroup, d: &Drawn, rng: &mut ChaCha8Rng, rec: &mut Recorder) {
    let Ok(fin) = d.dual.fin_part() else {
        rec.check(false, "regularisation through subgroups", "fin_part(dual q)", || {
            format!("{:?}", d.dual)
        });
        return;
    };
    let mut gens = fin.generators().to_vec();
    gens.push(g.element_at(rng.gen_range(0..g.order())));
    let candidates = [fin.clone(), Subgroup::generate(g, &gens).expect("subgroup"), Subgroup::full(g)];
    for h in &candidates {
        let op = format!("dual(restrict(dual q, {} characters))", h.order());
        let restricted = match d.dual.restrict(h) {
            Ok(r) => r.dual(),
            Err(e) => {
                rec.fail("regularisation through subgroups", &op, e);
                continue;
            }
        };
        let mut ok = true;
        let mut detail = String::new();
        for (i, x) in g.elements().enumerate() {
            let idx = h.class_index(&x.as_character()).expect("every character has a class");
            if restricted.values()[idx] != d.reg.values()[i] {
                ok = false;
                detail = format!(
                    "at {x}: restricted {} vs regularised {}",
                    restricted.values()[idx],
                    d.reg.values()[i]
                );
                break;
            }
        }
        rec.check(ok, "regularisation through subgroups", &op, || detail);
    }
}

fn check_lattice(g: &FiniteAbelianGroup, a: &Drawn, b: &Drawn, rec: &mut Recorder) {
    let family = [a.reg.clone(), b.reg.clone()];
    let j = join(&family).expect("same group");
    let m = meet(&family).expect("same group");
    rec.regular("lattice", "join of regulars", &j);
    rec.regular("lattice", "meet of regulars", &m);
    rec.le("lattice", "meet <= first", &m, &a.reg);
    rec.le("lattice", "meet <= second", &m, &b.reg);
    for t in [rational(1, 1), rational(1, 2), rational(3, 4)] {
        let r = m.scale(t).expect("positive factor").regularise();
        rec.le("lattice", &format!("regularise(scale(meet, {t})) <= meet"), &r, &m);
    }
    if g.order() * 4 <= 64 {
        for other in [2u64, 3] {
            let h = FiniteAbelianGroup::new(&[other]).expect("small group");
            let factor = QuasiNorm::discrete(&h).regularise();
            let op = format!("product(regularise(q), Z/{other})");
            match product(&[a.reg.clone(), factor]) {
                Ok(p) => rec.regular("product", &op, &p),
                Err(e) => rec.fail("product", &op, e),
            }
        }
    }
}

/// Lipschitz bound for characters that map small balls near the identity.
fn check_ball_bound(d: &Drawn, rec: &mut Recorder) {
    let failures = ball_bound_failures(&d.q, &ball_radii());
    rec.check(failures.is_empty(), "ball bound", "dual(q)(chi) <= 1/(2r)", || {
        format!("{failures:?} for {:?}", d.q)
    });
}

/// Radii used by the ball-bound oracle.
pub fn ball_radii() -> Vec<Rational> {
    vec![rational(1, 4), rational(1, 2), rational(1, 1), rational(2, 1)]
}

/// Brute-force search for characters `χ` and radii `r` such that `χ` maps the open
/// ball `{p < r}` into `{λ <= 1/4}` but `p#(χ) > 1/(2r)`. Returns `(character, r)`.
pub fn ball_bound_failures(q: &QuasiNorm, radii: &[Rational]) -> Vec<(String, Rational)> {
    let quarter = rational(1, 4);
    let dual = q.dual();
    let domain = q.domain();
    let chars = q.character_domain();
    let g = q.carrier().ambient();
    let mut out = Vec::new();
    for c in 0..chars.len() {
        let a = g.character(&to_signed(chars.point(c))).expect("in range");
        for &r in radii {
            let inside = (0..domain.len()).filter(|&i| match q.values()[i] {
                ExtValue::Finite(v) => v < r,
                ExtValue::Infinity => false,
            });
            let maps_small = inside.into_iter().all(|i| {
                let x = g.element(&to_signed(domain.point(i))).expect("in range");
                g.pair(&a, &x).expect("same group") <= quarter
            });
            if maps_small && dual.values()[c] > ExtValue::Finite((r * rational(2, 1)).recip()) {
                out.push((chars.format_point(c), r));
            }
        }
    }
    out
}

fn to_signed(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// A family built from regular quasi-norms: all joins of a random nonempty set of
/// one to three bases (so it is upward directed), sometimes with the meet of all
/// bases added (a common lower bound). `None` when the family is not separating.
pub fn random_structure(regulars: &[QuasiNorm], rng: &mut ChaCha8Rng) -> Option<MetricStructure> {
    if regulars.is_empty() {
        return None;
    }
    let k = rng.gen_range(1..=3usize);
    let bases: Vec<QuasiNorm> = (0..k)
        .map(|_| regulars[rng.gen_range(0..regulars.len())].clone())
        .collect();
    let mut members = Vec::new();
    for mask in 1u32..(1 << k) {
        let chosen: Vec<QuasiNorm> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| bases[i].clone())
            .collect();
        members.push(join(&chosen).expect("same group"));
    }
    if rng.gen_bool(0.5) {
        members.push(meet(&bases).expect("same group"));
    }
    let p = MetricStructure::new(members).expect("same group");
    check_structure(&p).separating.then_some(p)
}

/// Deterministic corpus of regular, upward directed, separating structures.
pub fn structure_corpus(max_order: usize, per_group: usize, seed: u64) -> Vec<MetricStructure> {
    let mut out = Vec::new();
    for g in groups_up_to(max_order) {
        let s = group_seed(seed, &g);
        let regulars: Vec<QuasiNorm> = draw_corpus(&g, 24, s).iter().map(QuasiNorm::regularise).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(s.rotate_left(11));
        let mut found = 0;
        let mut attempts = 0;
        while found < per_group && attempts < per_group * 20 {
            attempts += 1;
            if let Some(p) = random_structure(&regulars, &mut rng) {
                out.push(p);
                found += 1;
            }
        }
    }
    out
}

fn flags(p: &MetricStructure) -> [bool; 6] {
    let r = check_structure(p);
    [
        r.separating,
        r.upward_directed,
        r.downward_directed,
        r.fin_covering,
        r.is_metric_structure,
        r.is_regular_structure,
    ]
}

fn check_structure_laws(p: &MetricStructure, rec: &mut Recorder) {
    match check_prop_metrstr(p) {
        Ok(e) => rec.check(e.consistent, "structure equivalence", "conditions (i), (ii), (iii)", || {
            format!("{e:?} for {:?}", p.members())
        }),
        Err(err) => rec.fail("structure equivalence", "preconditions", err),
    }
    let dd = dual_structure(&dual_structure(p));
    for (q, back) in p.members().iter().zip(dd.members()) {
        rec.check(
            back.values() == q.regularise().values(),
            "structure double dual",
            "dual_structure twice",
            || format!("{back:?} vs {q:?}"),
        );
    }
    let base = flags(p);
    let mut reversed = p.members().to_vec();
    reversed.reverse();
    let mut duplicated = p.members().to_vec();
    duplicated.push(p.members()[0].clone());
    for (name, members) in [("reversed", reversed), ("duplicated", duplicated)] {
        let other = flags(&MetricStructure::new(members).expect("same group"));
        rec.check(other == base, "structure invariance", name, || {
            format!("{base:?} vs {other:?}")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = run_property_suite(&VerifyConfig {
            max_order: 8,
            draws: 12,
            seed: 3,
        })
        .unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.checks > 1000);
    }

    #[test]
    fn trivial_group_is_vacuous() {
        let report = run_property_suite(&VerifyConfig {
            max_order: 1,
            draws: 3,
            seed: 0,
        })
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.groups.len(), 1);
    }

    #[test]
    fn deterministic() {
        let cfg = VerifyConfig {
            max_order: 6,
            draws: 5,
            seed: 9,
        };
        assert_eq!(run_property_suite(&cfg).unwrap(), run_property_suite(&cfg).unwrap());
    }
}
