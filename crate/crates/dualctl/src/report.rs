// SPDX-License-Identifier: Apache-2.0

//! JSON reports with a fixed key order.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use metric_duality::{ExtValue, QuasiNorm};

use crate::document::NormDocument;
use crate::error::Result;

/// SHA-256 over the inputs, each prefixed by its byte length.
pub fn digest<'a>(inputs: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Report(Map<String, Value>);

impl Report {
    pub fn new(command: &str, arguments: Value, input_digest: String) -> Self {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(command.into()));
        m.insert("arguments".into(), arguments);
        m.insert("input_sha256".into(), Value::String(input_digest));
        Report(m)
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.0.insert(key.into(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.0).expect("report serialises");
        s.push('\n');
        s
    }
}

pub fn ext(v: ExtValue) -> Value {
    Value::String(v.to_string())
}

/// A quasi-norm on a full group as an embedded, re-parsable document.
pub fn document(q: &QuasiNorm) -> Result<Value> {
    Ok(serde_json::to_value(NormDocument::from_quasinorm(q)?)?)
}

/// Point-to-value map for any domain.
pub fn table(q: &QuasiNorm) -> Value {
    let d = q.domain();
    let m: Map<String, Value> = (0..d.len())
        .map(|i| (d.format_point(i), ext(q.values()[i])))
        .collect();
    Value::Object(m)
}

pub fn strings<I: IntoIterator<Item = S>, S: ToString>(items: I) -> Value {
    Value::Array(items.into_iter().map(|s| Value::String(s.to_string())).collect())
}
