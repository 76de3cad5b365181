// SPDX-License-Identifier: Apache-2.0

//! Input documents.
//!
//! A norm document names a group by its moduli and a quasi-norm on it:
//!
//! ```json
//! {"group": [9], "norm": {"type": "table", "values": {"(0)": "0", "(1)": "1/2", ...}}}
//! ```
//!
//! Element keys are parenthesised residue tuples; values are `num/den`, integers,
//! or `inf`.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use metric_duality::continuous::RealNorm;
use metric_duality::duality::DomainLabel;
use metric_duality::{make_group, random_quasinorm, ExtValue, FiniteAbelianGroup, QuasiNorm};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct NormDocument {
    pub group: Vec<u64>,
    pub norm: NormKind,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum NormKind {
    Discrete {},
    Zero {},
    Infty {},
    Table {
        #[serde(deserialize_with = "ordered_entries", serialize_with = "entries_as_map")]
        values: Vec<(String, String)>,
    },
    Random {
        seed: u64,
        pool: Vec<String>,
    },
}

/// Keeps every entry, in document order, so duplicate keys can be reported.
fn ordered_entries<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(String, String)>, D::Error> {
    struct Entries;

    impl<'de> Visitor<'de> for Entries {
        type Value = Vec<(String, String)>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a map from element keys to value strings")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
            let mut out = Vec::with_capacity(map.size_hint().unwrap_or(0));
            while let Some(entry) = map.next_entry::<String, String>()? {
                out.push(entry);
            }
            Ok(out)
        }
    }

    d.deserialize_map(Entries)
}

fn entries_as_map<S: Serializer>(values: &[(String, String)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(values.len()))?;
    for (k, v) in values {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

/// Parses `(x1,...,xk)` against the moduli. Residues must already be reduced.
pub fn parse_element_key(key: &str, moduli: &[u64]) -> Result<Vec<u64>> {
    let inner = key
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CliError::input(format!("element key {key:?} is not a parenthesised tuple")))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != moduli.len() {
        return Err(CliError::input(format!(
            "element key {key:?} has {} components, the group has {}",
            parts.len(),
            moduli.len()
        )));
    }
    parts
        .iter()
        .zip(moduli)
        .map(|(p, &n)| {
            let r: u64 = p
                .parse()
                .map_err(|_| CliError::input(format!("element key {key:?}: {p:?} is not a residue")))?;
            if r >= n {
                return Err(CliError::input(format!(
                    "element key {key:?}: residue {r} is out of range for Z/{n}"
                )));
            }
            Ok(r)
        })
        .collect()
}

/// Parses `num/den`, an integer, or `inf` into a nonnegative extended value.
pub fn parse_value(s: &str) -> Result<ExtValue> {
    s.parse::<ExtValue>().map_err(CliError::from)
}

fn tuple_key(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

impl NormDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn group(&self) -> Result<FiniteAbelianGroup> {
        Ok(make_group(&self.group)?)
    }

    /// Builds and validates the quasi-norm.
    pub fn build(&self) -> Result<QuasiNorm> {
        let g = self.group()?;
        let q = match &self.norm {
            NormKind::Discrete {} => QuasiNorm::discrete(&g),
            NormKind::Zero {} => QuasiNorm::zero(&g),
            NormKind::Infty {} => QuasiNorm::infinite(&g),
            NormKind::Random { seed, pool } => {
                let pool = pool.iter().map(|s| parse_value(s)).collect::<Result<Vec<_>>>()?;
                random_quasinorm(&g, *seed, &pool)?
            }
            NormKind::Table { values } => {
                let mut table: Vec<Option<ExtValue>> = vec![None; g.order()];
                for (key, value) in values {
                    let x = parse_element_key(key, g.moduli())?;
                    let slot = &mut table[g.index_of(&x)];
                    if slot.is_some() {
                        return Err(CliError::input(format!("element {} appears twice", tuple_key(&x))));
                    }
                    *slot = Some(parse_value(value)?);
                }
                let missing: Vec<String> = table
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.is_none())
                    .map(|(i, _)| g.element_at(i).to_string())
                    .collect();
                if !missing.is_empty() {
                    return Err(CliError::input(format!(
                        "table is partial: {} of {} elements missing, first {}",
                        missing.len(),
                        g.order(),
                        missing[0]
                    )));
                }
                QuasiNorm::from_values(&g, table.into_iter().map(Option::unwrap).collect())?
            }
        };
        Ok(q)
    }

    /// Table document for a quasi-norm on a full group or on its character group.
    pub fn from_quasinorm(q: &QuasiNorm) -> Result<Self> {
        let DomainLabel::Group { moduli } = q.domain().label() else {
            return Err(CliError::input("only tables on full groups form documents"));
        };
        let d = q.domain();
        let values = (0..d.len())
            .map(|i| (tuple_key(d.point(i)), q.values()[i].to_string()))
            .collect();
        Ok(NormDocument {
            group: moduli.clone(),
            norm: NormKind::Table { values },
        })
    }

    /// Table document on the ambient group of a restricted quasi-norm: the
    /// restricted values on the subgroup and `inf` elsewhere.
    pub fn extension(restricted: &QuasiNorm) -> Result<Self> {
        let DomainLabel::Subgroup { moduli, .. } = restricted.domain().label() else {
            return Err(CliError::input("extension needs a quasi-norm on a subgroup"));
        };
        let g = make_group(moduli)?;
        let mut values = vec![ExtValue::Infinity; g.order()];
        let d = restricted.domain();
        for i in 0..d.len() {
            values[g.index_of(d.point(i))] = restricted.values()[i];
        }
        let values = g
            .elements()
            .zip(values)
            .map(|(x, v)| (x.to_string(), v.to_string()))
            .collect();
        Ok(NormDocument {
            group: moduli.clone(),
            norm: NormKind::Table { values },
        })
    }
}

/// A monotone norm on the real line.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum RealNormDocument {
    Power { alpha: f64 },
    Linear { slope: f64 },
    Log1p { scale: f64 },
    Table {
        breakpoints: Vec<(f64, f64)>,
        tail_slope: f64,
    },
}

impl RealNormDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_norm(&self) -> RealNorm {
        match self {
            RealNormDocument::Power { alpha } => RealNorm::Power { alpha: *alpha },
            RealNormDocument::Linear { slope } => RealNorm::Linear { slope: *slope },
            RealNormDocument::Log1p { scale } => RealNorm::Log1p { scale: *scale },
            RealNormDocument::Table {
                breakpoints,
                tail_slope,
            } => RealNorm::Table {
                breakpoints: breakpoints.clone(),
                tail_slope: *tail_slope,
            },
        }
    }
}
