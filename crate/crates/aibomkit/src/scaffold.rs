//! Template documents with every mandatory field filled in.
//!
//! Placeholders live under `https://example.invalid/` so a template can
//! never be mistaken for a real BOM. Both license relationships target
//! the no-assertion sentinel. Timestamps are fixed so scaffolding is
//! deterministic.

use aibom_core::{
    Agent, AiPackage, CreationInfo, DatasetPackage, DatasetType, Element, Iri, PackageCore,
    PropertyValue, Relationship, RelationshipType, SoftwarePurpose, SpdxDocument,
    NO_ASSERTION_LICENSE_IRI,
};

use crate::json::DEFAULT_CONTEXT_IRI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaffoldKind {
    Ai,
    Dataset,
}

const PLACEHOLDER_TIME: &str = "2024-01-01T00:00:00Z";

/// Builds a template document that validates with zero errors.
pub fn scaffold_document(kind: ScaffoldKind) -> SpdxDocument {
    let (slug, name, purpose) = match kind {
        ScaffoldKind::Ai => ("ai", "example-ai-package", SoftwarePurpose::Model),
        ScaffoldKind::Dataset => ("dataset", "example-dataset-package", SoftwarePurpose::Data),
    };
    let pkg_id = Iri::new(&format!(
        "https://example.invalid/spdxdocs/scaffold-{}/package",
        slug
    ))
    .unwrap();

    let mut doc = SpdxDocument::new();
    doc.context = Some(PropertyValue::Text(DEFAULT_CONTEXT_IRI.into()));
    doc.spdx_id = Some(
        Iri::new(&format!(
            "https://example.invalid/spdxdocs/scaffold-{}/document",
            slug
        ))
        .unwrap(),
    );
    doc.creation_info = Some(CreationInfo {
        created: Some(PLACEHOLDER_TIME.parse().unwrap()),
        created_by: vec![Agent::tool("aibomkit")],
        ..Default::default()
    });
    doc.profile_conformance = match kind {
        ScaffoldKind::Ai => vec!["ai".into(), "core".into(), "software".into()],
        ScaffoldKind::Dataset => vec!["core".into(), "dataset".into(), "software".into()],
    };
    doc.root_elements = vec![pkg_id.clone()];

    let core = PackageCore {
        spdx_id: Some(pkg_id.clone()),
        name: name.into(),
        package_version: "0.1.0".into(),
        build_time: Some(PLACEHOLDER_TIME.parse().unwrap()),
        release_time: Some(PLACEHOLDER_TIME.parse().unwrap()),
        download_location: vec![Iri::new(&format!(
            "https://example.invalid/downloads/{}.tar.gz",
            name
        ))
        .unwrap()],
        primary_purpose: Some(purpose),
        supplied_by: vec![Agent::organization("Example Organization")],
        originated_by: vec![Agent::organization("Example Organization")],
        comment: Some("placeholder values; replace before publishing".into()),
        ..Default::default()
    };
    let element = match kind {
        ScaffoldKind::Ai => Element::Ai(AiPackage {
            core,
            ..Default::default()
        }),
        ScaffoldKind::Dataset => Element::Dataset(DatasetPackage {
            core,
            dataset_type: vec![DatasetType::NoAssertion],
            ..Default::default()
        }),
    };
    doc.add_element(element).unwrap();

    let no_assertion = Iri::new(NO_ASSERTION_LICENSE_IRI).unwrap();
    doc.add_relationship(Relationship::new(
        RelationshipType::HasConcludedLicense,
        pkg_id.clone(),
        vec![no_assertion.clone()],
    ));
    doc.add_relationship(Relationship::new(
        RelationshipType::HasDeclaredLicense,
        pkg_id,
        vec![no_assertion],
    ));
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use aibom_core::{validate_document, Profile};

    #[test]
    fn templates_validate_clean() {
        for kind in [ScaffoldKind::Ai, ScaffoldKind::Dataset] {
            let doc = scaffold_document(kind);
            let diags = validate_document(&doc, &[Profile::Ai, Profile::Dataset]);
            assert!(
                aibom_core::validator::is_conformant(&diags),
                "{:?}: {:?}",
                kind,
                diags
            );
        }
    }

    #[test]
    fn dataset_template_carries_profile_specific_mandatory_fields() {
        let doc = scaffold_document(ScaffoldKind::Dataset);
        let Element::Dataset(pkg) = &doc.elements()[0] else {
            panic!("dataset scaffold holds a DatasetPackage");
        };
        assert!(!pkg.dataset_type.is_empty());
        assert!(!pkg.core.originated_by.is_empty());
    }

    #[test]
    fn template_round_trips_through_the_file_format() {
        let doc = scaffold_document(ScaffoldKind::Ai);
        let bytes = crate::json::write_document(&doc);
        let outcome = crate::json::read_document(&bytes).unwrap();
        assert_eq!(outcome.document, doc);
    }
}
