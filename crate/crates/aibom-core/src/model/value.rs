//! Opaque property values.
//!
//! Elements may carry properties this model does not interpret (profiles
//! outside AI/Dataset, vendor extensions, fields from future SPDX
//! revisions). They are kept verbatim so a read/write cycle never drops
//! data, and re-emitted by the canonical writer.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

/// A syntax-agnostic scalar or tree value for uninterpreted properties.
///
/// Numbers keep their source lexical form so canonical output never
/// rewrites `0.042` into `4.2e-2` or similar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyValue {
    Null,
    Bool(bool),
    /// Numeric literal, exact source text.
    Number(String),
    Text(String),
    Array(Vec<PropertyValue>),
    /// Nested object; keys are held sorted (canonical order).
    Object(BTreeMap<String, PropertyValue>),
}

impl PropertyValue {
    pub fn as_text(&self) -> Option<&str> {
        match self {
            PropertyValue::Text(s) => Some(s),
            _ => None,
        }
    }

    /// True for values that carry no usable content (empty text, empty
    /// containers, null). Used by the coverage engine when deciding
    /// whether a pass-through property counts as evidence.
    pub fn is_empty_content(&self) -> bool {
        match self {
            PropertyValue::Null => true,
            PropertyValue::Text(s) => s.is_empty(),
            PropertyValue::Array(items) => items.is_empty(),
            PropertyValue::Object(map) => map.is_empty(),
            PropertyValue::Bool(_) | PropertyValue::Number(_) => false,
        }
    }
}

/// Uninterpreted properties of one element, keyed by their wire name.
///
/// Keys are stored sorted. The canonical writer alphabetizes every object
/// anyway, so sorted storage makes `read(write(doc)) == doc` hold for the
/// bag as well.
pub type PropertyBag = BTreeMap<String, PropertyValue>;
