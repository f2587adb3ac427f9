//! The document file format: JSON text with type discriminators and
//! `ai_`/`dataset_` property prefixes.
//!
//! [`read::read_document`] is tolerant: it accepts an
//! `{"@context", "@graph"}` envelope, a bare array of nodes, or a single
//! node, and reports recoverable problems as diagnostics instead of
//! failing. [`write::write_document`] is strict: one canonical byte form
//! per document (fixed key order, 2-space indent, LF, UTF-8), so writing
//! is deterministic and canonicalization is idempotent.

pub mod read;
pub mod write;

pub use read::{read_document, ReadError, ReadOutcome};
pub use write::write_document;

use aibom_core::PropertyValue;
use serde_json::{Map, Value};

/// File extension for documents in this format.
pub const FILE_EXTENSION: &str = ".spdx.json";

/// Context IRI written by tools that create fresh documents. Documents
/// read from disk keep whatever context they declared.
pub const DEFAULT_CONTEXT_IRI: &str = "https://spdx.org/rdf/3.0.1/spdx-context.jsonld";

pub(crate) fn value_to_opaque(value: &Value) -> PropertyValue {
    match value {
        Value::Null => PropertyValue::Null,
        Value::Bool(b) => PropertyValue::Bool(*b),
        Value::Number(n) => PropertyValue::Number(n.to_string()),
        Value::String(s) => PropertyValue::Text(s.clone()),
        Value::Array(items) => PropertyValue::Array(items.iter().map(value_to_opaque).collect()),
        Value::Object(map) => PropertyValue::Object(
            map.iter()
                .map(|(k, v)| (k.clone(), value_to_opaque(v)))
                .collect(),
        ),
    }
}

pub(crate) fn opaque_to_value(value: &PropertyValue) -> Value {
    match value {
        PropertyValue::Null => Value::Null,
        PropertyValue::Bool(b) => Value::Bool(*b),
        PropertyValue::Number(text) => text
            .parse::<serde_json::Number>()
            .map(Value::Number)
            .unwrap_or_else(|_| Value::String(text.clone())),
        PropertyValue::Text(s) => Value::String(s.clone()),
        PropertyValue::Array(items) => Value::Array(items.iter().map(opaque_to_value).collect()),
        PropertyValue::Object(map) => {
            // nested opaque objects get the same canonical key order as
            // interpreted nodes: type, spdxId, then alphabetical
            let mut pairs: Vec<(String, Value)> = map
                .iter()
                .map(|(k, v)| (k.clone(), opaque_to_value(v)))
                .collect();
            sort_canonical(&mut pairs);
            let mut out = Map::new();
            for (k, v) in pairs {
                out.insert(k, v);
            }
            Value::Object(out)
        }
    }
}

pub(crate) fn sort_canonical(pairs: &mut [(String, Value)]) {
    pairs.sort_by(|(a, _), (b, _)| key_rank(a).cmp(&key_rank(b)).then_with(|| a.cmp(b)));
}

fn key_rank(key: &str) -> u8 {
    match key {
        "type" => 0,
        "spdxId" => 1,
        _ => 2,
    }
}
