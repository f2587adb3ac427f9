//! One SPDX document: element index, relationship list, reference
//! resolution, and the document-level conformance declaration.
//!
//! Documents are built single-threaded and then treated as frozen; all
//! read paths take `&self`, so a finished document can be shared across
//! threads by the validator and the coverage engine.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{
    CreationInfo, Element, ElementId, PropertyBag, PropertyValue, Relationship, RelationshipType,
};

/// Whether a referenced element lives in this document.
///
/// External references (license-list IRIs, off-document datasets) are
/// first-class and never an error by themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetStatus {
    Internal,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    DuplicateId(ElementId),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::DuplicateId(id) => write!(f, "duplicate spdxId {}", id),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DocumentError {}

/// Container and graph for one document.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpdxDocument {
    pub creation_info: Option<CreationInfo>,
    /// Declared profile conformance tokens (`ai`, `core`, `dataset`, ...).
    pub profile_conformance: Vec<String>,
    pub root_elements: Vec<ElementId>,
    /// The document node's own id, when it has one.
    pub spdx_id: Option<ElementId>,
    /// Uninterpreted properties of the document node.
    pub unknown: PropertyBag,
    /// The serialization context, when the source carried one.
    pub context: Option<PropertyValue>,
    elements: Vec<Element>,
    by_id: BTreeMap<ElementId, usize>,
    relationships: Vec<Relationship>,
}

impl SpdxDocument {
    pub fn new() -> Self {
        SpdxDocument::default()
    }

    /// Appends an element, preserving insertion order.
    ///
    /// Elements without an spdxId are stored but not indexed; they cannot
    /// be referenced and the validator reports the missing id.
    pub fn add_element(&mut self, element: Element) -> Result<(), DocumentError> {
        if let Some(id) = element.spdx_id() {
            if self.by_id.contains_key(id) {
                return Err(DocumentError::DuplicateId(id.clone()));
            }
            self.by_id.insert(id.clone(), self.elements.len());
        }
        self.elements.push(element);
        Ok(())
    }

    pub fn add_relationship(&mut self, relationship: Relationship) {
        self.relationships.push(relationship);
    }

    pub fn element(&self, id: &ElementId) -> Option<&Element> {
        self.by_id.get(id).map(|&i| &self.elements[i])
    }

    pub fn contains(&self, id: &ElementId) -> bool {
        self.by_id.contains_key(id)
    }

    /// Elements in insertion order (which is also write-out order).
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn relationships(&self) -> &[Relationship] {
        &self.relationships
    }

    /// All relationships with the given source, optionally filtered by
    /// type, in document order. Unknown ids yield an empty list.
    pub fn relationships_from(
        &self,
        id: &ElementId,
        relationship_type: Option<RelationshipType>,
    ) -> Vec<&Relationship> {
        self.relationships
            .iter()
            .filter(|r| r.from == *id)
            .filter(|r| relationship_type.is_none_or(|t| r.relationship_type == t))
            .collect()
    }

    /// Classifies each target of a relationship as internal (present in
    /// this document's element index) or external.
    pub fn resolve_targets(&self, relationship: &Relationship) -> Vec<(ElementId, TargetStatus)> {
        relationship
            .to
            .iter()
            .map(|id| {
                let status = if self.contains(id) {
                    TargetStatus::Internal
                } else {
                    TargetStatus::External
                };
                (id.clone(), status)
            })
            .collect()
    }
}
