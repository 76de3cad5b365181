// SPDX-License-Identifier: Apache-2.0

//! Finite families of quasi-norms on one group.
//!
//! A family is a metric structure when it separates points, is directed both
//! ways, and every point has finite value under some member. Directedness is
//! checked within the family: a bound must itself be a member.

use crate::error::{Error, Result};
use crate::quasinorm::QuasiNorm;

/// A nonempty family of quasi-norms sharing one index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricStructure {
    members: Vec<QuasiNorm>,
}

impl MetricStructure {
    pub fn new(members: Vec<QuasiNorm>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::input("a structure needs at least one member"))?;
        if members.iter().any(|q| !q.is_compatible(first)) {
            return Err(Error::MixedGroups);
        }
        Ok(MetricStructure { members })
    }

    pub fn members(&self) -> &[QuasiNorm] {
        &self.members
    }

    fn len_points(&self) -> usize {
        self.members[0].len()
    }

    fn format_point(&self, i: usize) -> String {
        self.members[0].domain().format_point(i)
    }
}

/// Per-flag counterexamples for [`check_structure`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureWitnesses {
    /// A nonzero point where every member vanishes.
    pub separating: Option<String>,
    /// Member indices with no common upper bound in the family.
    pub upward: Option<(usize, usize)>,
    /// Member indices with no common lower bound in the family.
    pub downward: Option<(usize, usize)>,
    /// A point where every member is infinite.
    pub fin: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub separating: bool,
    pub upward_directed: bool,
    pub downward_directed: bool,
    pub fin_covering: bool,
    pub is_metric_structure: bool,
    /// All members regular. On finite groups every induced topology is discrete,
    /// so this is all semireflexivity of a structure amounts to.
    pub is_regular_structure: bool,
    pub witnesses: StructureWitnesses,
}

fn separating_witness(p: &MetricStructure) -> Option<usize> {
    (1..p.len_points()).find(|&i| p.members.iter().all(|q| q.values()[i].is_zero()))
}

fn fin_witness(p: &MetricStructure) -> Option<usize> {
    (0..p.len_points()).find(|&i| p.members.iter().all(|q| !q.values()[i].is_finite()))
}

fn le(a: &QuasiNorm, b: &QuasiNorm) -> bool {
    a.values().iter().zip(b.values()).all(|(x, y)| x <= y)
}

fn upward_witness(p: &MetricStructure) -> Option<(usize, usize)> {
    let m = &p.members;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if !m.iter().any(|r| le(&m[i], r) && le(&m[j], r)) {
                return Some((i, j));
            }
        }
    }
    None
}

fn downward_witness(p: &MetricStructure) -> Option<(usize, usize)> {
    let m = &p.members;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if !m.iter().any(|v| le(v, &m[i]) && le(v, &m[j])) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn check_structure(p: &MetricStructure) -> StructureReport {
    let sep = separating_witness(p);
    let up = upward_witness(p);
    let down = downward_witness(p);
    let fin = fin_witness(p);
    let separating = sep.is_none();
    let upward_directed = up.is_none();
    let downward_directed = down.is_none();
    let fin_covering = fin.is_none();
    StructureReport {
        separating,
        upward_directed,
        downward_directed,
        fin_covering,
        is_metric_structure: separating && upward_directed && downward_directed && fin_covering,
        is_regular_structure: p.members.iter().all(|q| q.is_regular().is_regular),
        witnesses: StructureWitnesses {
            separating: sep.map(|i| p.format_point(i)),
            upward: up,
            downward: down,
            fin: fin.map(|i| p.format_point(i)),
        },
    }
}

/// Memberwise duals, in the same order.
pub fn dual_structure(p: &MetricStructure) -> MetricStructure {
    MetricStructure {
        members: p.members.iter().map(QuasiNorm::dual).collect(),
    }
}

/// The three equivalent conditions for a regular, upward directed, separating family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// The dual family is separating and upward directed.
    pub condition_i: bool,
    /// The family is downward directed and every point is finite under some member.
    pub condition_ii: bool,
    /// The dual family is separating, directed both ways, and pointwise finite somewhere.
    pub condition_iii: bool,
    /// All three agree. A disagreement is an engine defect, not an input problem.
    pub consistent: bool,
}

/// Evaluates the three conditions. Fails with an input error when the family is
/// not regular, upward directed and separating.
pub fn check_prop_metrstr(p: &MetricStructure) -> Result<EquivalenceReport> {
    let own = check_structure(p);
    if !own.is_regular_structure {
        return Err(Error::input("every member must be regular"));
    }
    if !own.upward_directed {
        return Err(Error::input("the family must be upward directed"));
    }
    if !own.separating {
        return Err(Error::input("the family must be separating"));
    }
    let dual = check_structure(&dual_structure(p));
    let condition_i = dual.separating && dual.upward_directed;
    let condition_ii = own.downward_directed && own.fin_covering;
    let condition_iii =
        dual.separating && dual.upward_directed && dual.downward_directed && dual.fin_covering;
    Ok(EquivalenceReport {
        condition_i,
        condition_ii,
        condition_iii,
        consistent: condition_i == condition_ii && condition_ii == condition_iii,
    })
}
