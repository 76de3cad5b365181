// SPDX-License-Identifier: Apache-2.0

//! One function per subcommand. Each takes document texts rather than paths so
//! it can be driven directly from tests.

use serde_json::{json, Value};

use metric_duality::continuous::{
    is_quasiconcave, real_bidual, real_dual, real_dual_closed, TransformConfig,
};
use metric_duality::structures::{check_prop_metrstr, check_structure, MetricStructure};
use metric_duality::verify::{run_property_suite, VerifyConfig};
use metric_duality::{join, meet, product, Error, QuasiNorm, Subgroup};

use crate::document::{parse_element_key, NormDocument, RealNormDocument};
use crate::error::{CliError, Result};
use crate::report::{digest, document, ext, strings, table, Report};

/// How a command finished when it produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// The report describes rejected input, such as a failed axiom.
    Rejected,
    /// The report records a broken identity.
    Defect,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Rejected => 1,
            Status::Defect => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub status: Status,
    /// CSV body for commands that sample.
    pub csv: Option<String>,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            status: Status::Success,
            csv: None,
        }
    }
}

fn start(command: &str, arguments: Value, texts: &[&str]) -> Report {
    Report::new(command, arguments, digest(texts.iter().map(|t| t.as_bytes())))
}

fn load(text: &str) -> Result<QuasiNorm> {
    NormDocument::parse(text)?.build()
}

fn load_all(texts: &[&str]) -> Result<Vec<QuasiNorm>> {
    texts.iter().map(|t| load(t)).collect()
}

fn regularity(q: &QuasiNorm) -> Value {
    let r = q.is_regular();
    json!({
        "is_regular": r.is_regular,
        "is_reflexive": r.is_reflexive,
        "evaluation_bijective": r.evaluation_bijective,
        "witness": r.witness.map(|w| json!({
            "point": format!("({})", w.point.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
            "value": ext(w.value),
            "regularised": ext(w.regularised),
        })),
    })
}

/// The closure computation and the sup-inf formula must agree.
fn cross_check(q: &QuasiNorm) -> Result<QuasiNorm> {
    let reg = q.regularise();
    let formula = q.regularise_formula();
    if reg != formula {
        let d = q.domain();
        let i = (0..d.len())
            .find(|&i| reg.values()[i] != formula.values()[i])
            .unwrap_or(0);
        return Err(CliError::Defect(format!(
            "regularisation disagrees with the sup-inf formula at {}: {} vs {}",
            d.format_point(i),
            reg.values()[i],
            formula.values()[i]
        )));
    }
    Ok(reg)
}

pub fn validate(text: &str) -> Result<Outcome> {
    let mut report = start("validate", Value::Null, &[text]);
    let doc = NormDocument::parse(text)?;
    match doc.build() {
        Ok(q) => {
            report.set("valid", true).set("order", q.len());
            Ok(Outcome::ok(report))
        }
        Err(CliError::Engine(Error::Axiom(v))) => {
            report.set("valid", false).set(
                "violation",
                json!({ "axiom": v.axiom.to_string(), "witness": v.witness }),
            );
            Ok(Outcome {
                report,
                status: Status::Rejected,
                csv: None,
            })
        }
        Err(e) => Err(e),
    }
}

pub fn dual(text: &str) -> Result<Outcome> {
    let q = load(text)?;
    let d = q.dual();
    let mut report = start("dual", Value::Null, &[text]);
    report
        .set("input", regularity(&q))
        .set("dual", document(&d)?)
        .set("dual_flags", regularity(&d));
    if !d.is_regular().is_regular {
        return Err(CliError::Defect("a dual quasi-norm is not regular".into()));
    }
    Ok(Outcome::ok(report))
}

pub fn regularise(text: &str) -> Result<Outcome> {
    let q = load(text)?;
    let reg = cross_check(&q)?;
    let d = q.domain();
    let lowered: Vec<String> = (0..d.len())
        .filter(|&i| reg.values()[i] != q.values()[i])
        .map(|i| d.format_point(i))
        .collect();
    let mut report = start("regularise", Value::Null, &[text]);
    report
        .set("regularised", document(&reg)?)
        .set("lowered_at", lowered)
        .set("formula_agrees", true)
        .set("input", regularity(&q));
    Ok(Outcome::ok(report))
}

pub fn check(text: &str) -> Result<Outcome> {
    let q = load(text)?;
    cross_check(&q)?;
    let dual_regular = q.dual().is_regular().is_regular;
    let mut report = start("check", Value::Null, &[text]);
    let flags = q.is_regular();
    report
        .set("is_regular", flags.is_regular)
        .set("is_reflexive", flags.is_reflexive)
        .set("details", regularity(&q))
        .set("kernel", strings(q.kernel()?.elements()))
        .set("finite_part", strings(q.fin_part()?.elements()))
        .set("dual_is_regular", dual_regular);
    if !dual_regular {
        return Err(CliError::Defect("the dual quasi-norm is not regular".into()));
    }
    Ok(Outcome::ok(report))
}

fn lattice(name: &str, texts: &[&str], op: fn(&[QuasiNorm]) -> metric_duality::Result<QuasiNorm>) -> Result<Outcome> {
    let qs = load_all(texts)?;
    let r = op(&qs)?;
    let mut report = start(name, json!({ "documents": texts.len() }), texts);
    report
        .set("inputs_regular", qs.iter().map(|q| q.is_regular().is_regular).collect::<Vec<_>>())
        .set("result", document(&r)?)
        .set("result_flags", regularity(&r));
    Ok(Outcome::ok(report))
}

pub fn meet_docs(texts: &[&str]) -> Result<Outcome> {
    lattice("meet", texts, meet)
}

pub fn join_docs(texts: &[&str]) -> Result<Outcome> {
    lattice("join", texts, join)
}

pub fn product_docs(texts: &[&str]) -> Result<Outcome> {
    lattice("product", texts, product)
}

pub fn restrict(text: &str, gens: &[String]) -> Result<Outcome> {
    let doc = NormDocument::parse(text)?;
    let q = doc.build()?;
    let g = doc.group()?;
    let elems = gens
        .iter()
        .map(|s| {
            let r = parse_element_key(s, g.moduli())?;
            Ok(g.element(&r.iter().map(|&x| x as i64).collect::<Vec<_>>())?)
        })
        .collect::<Result<Vec<_>>>()?;
    let h = Subgroup::generate(&g, &elems)?;
    let r = q.restrict(&h)?;
    let extension = NormDocument::extension(&r)?;
    if let Err(e) = extension.build() {
        return Err(CliError::Defect(format!("extension by inf fails to validate: {e}")));
    }
    let mut report = start("restrict", json!({ "generators": gens }), &[text]);
    report
        .set(
            "subgroup",
            json!({ "order": h.order(), "elements": strings(h.elements()) }),
        )
        .set("restricted", table(&r))
        .set("restricted_flags", regularity(&r))
        .set("extension", serde_json::to_value(&extension)?);
    Ok(Outcome::ok(report))
}

pub fn structure(texts: &[&str]) -> Result<Outcome> {
    let p = MetricStructure::new(load_all(texts)?)?;
    let s = check_structure(&p);
    let mut report = start("structure", json!({ "documents": texts.len() }), texts);
    report
        .set("separating", s.separating)
        .set("upward_directed", s.upward_directed)
        .set("downward_directed", s.downward_directed)
        .set("fin_covering", s.fin_covering)
        .set("is_metric_structure", s.is_metric_structure)
        .set("is_regular_structure", s.is_regular_structure)
        .set(
            "witnesses",
            json!({
                "separating": s.witnesses.separating,
                "upward": s.witnesses.upward,
                "downward": s.witnesses.downward,
                "fin": s.witnesses.fin,
            }),
        );
    let mut status = Status::Success;
    match check_prop_metrstr(&p) {
        Ok(eq) => {
            report.set(
                "equivalence",
                json!({
                    "condition_i": eq.condition_i,
                    "condition_ii": eq.condition_ii,
                    "condition_iii": eq.condition_iii,
                    "consistent": eq.consistent,
                }),
            );
            if !eq.consistent {
                status = Status::Defect;
            }
        }
        Err(e) if e.is_input_error() => {
            report.set("equivalence", json!({ "skipped": e.to_string() }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Outcome {
        report,
        status,
        csv: None,
    })
}

pub fn real_dual_samples(text: &str, grid: usize, samples: &[f64], tol: f64) -> Result<Outcome> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::input(format!("tolerance {tol} must be positive")));
    }
    if samples.is_empty() {
        return Err(CliError::input("at least one sample point is required"));
    }
    let doc = RealNormDocument::parse(text)?;
    let norm = doc.to_norm();
    let cfg = TransformConfig {
        grid_points: grid,
        rel_tol: tol,
        ..TransformConfig::default()
    };
    cfg.validate()?;
    norm.validate(&cfg)?;
    let qc = is_quasiconcave(&norm, &cfg);

    let mut rows = Vec::with_capacity(samples.len());
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["t", "dual", "closed_form", "bidual", "abs_rel_gap", "tol"])?;
    let mut within = true;
    for &t in samples {
        let dual = real_dual(&norm, t, &cfg)?;
        let bidual = real_bidual(&norm, t, &cfg)?;
        let closed = if qc.holds {
            Some(real_dual_closed(&norm, t, &cfg)?)
        } else {
            None
        };
        let gap = closed.map(|c| ((dual - c) / c).abs());
        if gap.is_some_and(|g| !(g <= tol)) {
            within = false;
        }
        let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        out.write_record([
            t.to_string(),
            dual.to_string(),
            cell(closed),
            bidual.to_string(),
            cell(gap),
            tol.to_string(),
        ])?;
        rows.push(json!({
            "t": t, "dual": dual, "closed_form": closed, "bidual": bidual, "abs_rel_gap": gap,
        }));
    }
    let csv = String::from_utf8(out.into_inner().map_err(|e| csv::Error::from(e.into_error()))?)
        .expect("csv output is utf-8");

    let mut report = start(
        "real-dual",
        json!({ "grid": grid, "samples": samples, "tol": tol }),
        &[text],
    );
    report
        .set("norm", serde_json::to_value(&doc)?)
        .set(
            "quasiconcave",
            json!({
                "holds": qc.holds,
                "witness": qc.witness.map(|(a, b)| vec![a, b]),
                "detail": (!qc.holds).then(|| qc.describe()),
            }),
        )
        .set("rows", rows)
        .set("within_tolerance", within);
    let status = if within { Status::Success } else { Status::Defect };
    Ok(Outcome {
        report,
        status,
        csv: Some(csv),
    })
}

pub fn verify(orders: usize, draws: usize, seed: u64) -> Result<Outcome> {
    let cfg = VerifyConfig {
        max_order: orders,
        draws,
        seed,
    };
    let v = run_property_suite(&cfg)?;
    let mut report = start(
        "verify",
        json!({ "orders": orders, "draws": draws, "seed": seed }),
        &[],
    );
    let groups: Vec<Value> = v
        .groups
        .iter()
        .map(|g| {
            json!({
                "group": g.moduli,
                "draws": g.draws,
                "regular_draws": g.regular_draws,
                "structures": g.structures,
                "checks": g.checks,
            })
        })
        .collect();
    let violations: Vec<Value> = v
        .violations
        .iter()
        .map(|x| {
            json!({
                "group": x.group,
                "law": x.law,
                "operation": x.operation,
                "detail": x.detail,
            })
        })
        .collect();
    report
        .set("checks", v.checks)
        .set("groups", groups)
        .set("passed", v.passed())
        .set("violations", violations);
    let status = if v.passed() { Status::Success } else { Status::Defect };
    Ok(Outcome {
        report,
        status,
        csv: None,
    })
}
