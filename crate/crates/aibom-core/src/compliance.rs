//! Regulatory-coverage assessment.
//!
//! A [`Framework`] is a data-driven requirement set (EU AI Act
//! registration fields, FDA premarket items, ...). [`assess`] reports,
//! per requirement, whether a document carries the mapped fields.
//! Framework rulesets ship as data files in the companion crate so legal
//! updates never require code changes; this module only knows how to
//! evaluate them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::document::SpdxDocument;
use crate::model::{Agent, Element, ElementId, PropertyBag, PropertyValue, RelationshipType};

/// A requirement set derived from one regulation or standard family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Framework {
    pub id: String,
    pub name: String,
    pub requirements: Vec<Requirement>,
}

/// One row of a framework: a legal requirement and the document paths
/// that can evidence it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Requirement {
    pub id: String,
    /// The regulation's own reference, e.g. "Annex VIII Section A (1)".
    pub citation: String,
    pub description: String,
    /// Field or relationship selectors; empty when not mappable.
    pub mapped_paths: Vec<String>,
    pub mappable: bool,
}

impl Requirement {
    /// Structural invariant: unmappable requirements carry no paths.
    pub fn is_well_formed(&self) -> bool {
        self.mappable || self.mapped_paths.is_empty()
    }
}

/// Per-requirement outcome, from best to worst.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverageStatus {
    Satisfied,
    Partial,
    Missing,
    NotMappable,
}

impl CoverageStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverageStatus::Satisfied => "satisfied",
            CoverageStatus::Partial => "partial",
            CoverageStatus::Missing => "missing",
            CoverageStatus::NotMappable => "notMappable",
        }
    }
}

impl fmt::Display for CoverageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One piece of evidence: where a mapped path was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub element_id: Option<ElementId>,
    pub path: String,
}

/// One requirement's assessment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageEntry {
    pub requirement_id: String,
    pub status: CoverageStatus,
    pub evidence: Vec<Evidence>,
}

/// The whole assessment of one document against one framework.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub framework_id: String,
    pub entries: Vec<CoverageEntry>,
}

impl CoverageReport {
    pub fn count(&self, status: CoverageStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn mappable_total(&self) -> usize {
        self.entries.len() - self.count(CoverageStatus::NotMappable)
    }
}

/// A parsed mapped-path selector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    /// A field somewhere in the document, by unprefixed wire name.
    Field(String),
    /// A relationship type, written `relationship:<type>`.
    Relationship(String),
}

impl FromStr for Selector {
    type Err = core::convert::Infallible;

    fn from_str(path: &str) -> Result<Self, Self::Err> {
        Ok(match path.strip_prefix("relationship:") {
            Some(kind) => Selector::Relationship(kind.to_string()),
            None => Selector::Field(path.to_string()),
        })
    }
}

/// Field names the evidence search resolves against typed model fields.
const MODEL_FIELDS: &[&str] = &[
    "spdxId",
    "name",
    "buildTime",
    "releaseTime",
    "validUntilTime",
    "downloadLocation",
    "packageVersion",
    "primaryPurpose",
    "suppliedBy",
    "originatedBy",
    "supportLevel",
    "standardName",
    "comment",
    "description",
    "contentType",
    "created",
    "createdBy",
    "externalIdentifier",
    "autonomyType",
    "domain",
    "energyConsumption",
    "hyperparameter",
    "informationAboutTraining",
    "informationAboutApplication",
    "limitation",
    "metric",
    "metricDecisionThreshold",
    "modelDataPreprocessing",
    "modelExplainability",
    "safetyRiskAssessment",
    "standardCompliance",
    "typeOfModel",
    "useSensitivePersonalInformation",
    "datasetType",
    "anonymizationMethodUsed",
    "confidentialityLevel",
    "dataCollectionProcess",
    "dataPreprocessing",
    "datasetAvailability",
    "datasetNoise",
    "datasetSize",
    "datasetUpdateMechanism",
    "hasSensitivePersonalInformation",
    "intendedUse",
    "knownBias",
    "sensor",
];

/// Pass-through field names: not modeled, but regulations map to them,
/// so the evidence search looks for them among preserved properties.
const PASSTHROUGH_FIELDS: &[&str] = &["externalRef", "packageUrl", "verifiedUsing", "locator"];

/// Relationship names outside the modeled vocabulary that frameworks may
/// select; matched against opaquely preserved relationship nodes.
const PASSTHROUGH_RELATIONSHIPS: &[&str] = &["hasDocumentation"];

/// Whether a mapped path can be resolved by [`assess`]. Bundled
/// frameworks are checked against this at test time.
pub fn selector_is_known(path: &str) -> bool {
    match path.parse::<Selector>().unwrap() {
        Selector::Field(name) => {
            MODEL_FIELDS.contains(&name.as_str()) || PASSTHROUGH_FIELDS.contains(&name.as_str())
        }
        Selector::Relationship(kind) => {
            kind.parse::<RelationshipType>().is_ok()
                || PASSTHROUGH_RELATIONSHIPS.contains(&kind.as_str())
        }
    }
}

/// Assesses a frozen document against a framework.
///
/// A requirement is satisfied when every one of its mapped paths is
/// evidenced somewhere in the document, partial when only some are,
/// missing when none are. Evidence search is document-wide: any element
/// may satisfy a path.
pub fn assess(doc: &SpdxDocument, framework: &Framework) -> CoverageReport {
    let entries = framework
        .requirements
        .iter()
        .map(|req| {
            if !req.mappable {
                return CoverageEntry {
                    requirement_id: req.id.clone(),
                    status: CoverageStatus::NotMappable,
                    evidence: Vec::new(),
                };
            }
            let mut evidence = Vec::new();
            let mut hit = 0usize;
            for path in &req.mapped_paths {
                let found = find_evidence(doc, &path.parse().unwrap(), path);
                if !found.is_empty() {
                    hit += 1;
                    evidence.extend(found);
                }
            }
            let status = match hit {
                0 => CoverageStatus::Missing,
                n if n == req.mapped_paths.len() => CoverageStatus::Satisfied,
                _ => CoverageStatus::Partial,
            };
            CoverageEntry {
                requirement_id: req.id.clone(),
                status,
                evidence,
            }
        })
        .collect();
    CoverageReport {
        framework_id: framework.id.clone(),
        entries,
    }
}

fn find_evidence(doc: &SpdxDocument, selector: &Selector, path: &str) -> Vec<Evidence> {
    let mut out = Vec::new();
    match selector {
        Selector::Field(name) => {
            if document_has_field(doc, name) {
                out.push(Evidence {
                    element_id: doc.spdx_id.clone(),
                    path: path.to_string(),
                });
            }
            for element in doc.elements() {
                if element_has_field(element, name) {
                    out.push(Evidence {
                        element_id: element.spdx_id().cloned(),
                        path: path.to_string(),
                    });
                }
            }
        }
        Selector::Relationship(kind) => {
            if let Ok(known) = kind.parse::<RelationshipType>() {
                for rel in doc.relationships() {
                    if rel.relationship_type == known {
                        out.push(Evidence {
                            element_id: Some(rel.from.clone()),
                            path: path.to_string(),
                        });
                    }
                }
            }
            // relationship types outside the modeled vocabulary survive
            // as opaque nodes; match them by their preserved type token
            for element in doc.elements() {
                if let Element::Generic(g) = element {
                    let tagged = g.type_tag == "Relationship"
                        && g.properties
                            .get("relationshipType")
                            .and_then(PropertyValue::as_text)
                            == Some(kind.as_str());
                    if tagged {
                        out.push(Evidence {
                            element_id: g.spdx_id.clone(),
                            path: path.to_string(),
                        });
                    }
                }
            }
        }
    }
    out
}

fn document_has_field(doc: &SpdxDocument, name: &str) -> bool {
    match name {
        "created" => doc
            .creation_info
            .as_ref()
            .is_some_and(|ci| ci.created.is_some()),
        "createdBy" => doc
            .creation_info
            .as_ref()
            .is_some_and(|ci| !ci.created_by.is_empty()),
        "externalIdentifier" => doc
            .creation_info
            .as_ref()
            .is_some_and(|ci| ci.created_by.iter().any(agent_has_identifier)),
        _ => false,
    }
}

fn agent_has_identifier(agent: &Agent) -> bool {
    !agent.external_identifiers.is_empty()
}

fn some_text(value: &Option<String>) -> bool {
    value.as_ref().is_some_and(|s| !s.is_empty())
}

fn element_has_field(element: &Element, name: &str) -> bool {
    let direct = match element {
        Element::Ai(pkg) => {
            core_has_field(&pkg.core, name)
                || match name {
                    "autonomyType" => pkg.autonomy_type.is_some(),
                    "domain" => some_text(&pkg.domain),
                    "energyConsumption" => pkg
                        .energy_consumption
                        .as_ref()
                        .is_some_and(|e| !e.is_empty()),
                    "hyperparameter" => !pkg.hyperparameter.is_empty(),
                    "informationAboutTraining" => some_text(&pkg.information_about_training),
                    "informationAboutApplication" => some_text(&pkg.information_about_application),
                    "limitation" => some_text(&pkg.limitation),
                    "metric" => !pkg.metric.is_empty(),
                    "metricDecisionThreshold" => !pkg.metric_decision_threshold.is_empty(),
                    "modelDataPreprocessing" => !pkg.model_data_preprocessing.is_empty(),
                    "modelExplainability" => !pkg.model_explainability.is_empty(),
                    "safetyRiskAssessment" => pkg.safety_risk_assessment.is_some(),
                    "standardCompliance" => !pkg.standard_compliance.is_empty(),
                    "typeOfModel" => !pkg.type_of_model.is_empty(),
                    "useSensitivePersonalInformation" => {
                        pkg.use_sensitive_personal_information.is_some()
                    }
                    "externalIdentifier" => pkg
                        .core
                        .supplied_by
                        .iter()
                        .chain(pkg.core.originated_by.iter())
                        .any(agent_has_identifier),
                    _ => false,
                }
                || bag_has_field(&pkg.unknown, name)
        }
        Element::Dataset(pkg) => {
            core_has_field(&pkg.core, name)
                || match name {
                    "datasetType" => !pkg.dataset_type.is_empty(),
                    "anonymizationMethodUsed" => some_text(&pkg.anonymization_method_used),
                    "confidentialityLevel" => pkg.confidentiality_level.is_some(),
                    "dataCollectionProcess" => some_text(&pkg.data_collection_process),
                    "dataPreprocessing" => some_text(&pkg.data_preprocessing),
                    "datasetAvailability" => pkg.dataset_availability.is_some(),
                    "datasetNoise" => some_text(&pkg.dataset_noise),
                    "datasetSize" => pkg.dataset_size.is_some(),
                    "datasetUpdateMechanism" => some_text(&pkg.dataset_update_mechanism),
                    "hasSensitivePersonalInformation" => {
                        pkg.has_sensitive_personal_information.is_some()
                    }
                    "intendedUse" => some_text(&pkg.intended_use),
                    "knownBias" => some_text(&pkg.known_bias),
                    "sensor" => !pkg.sensor.is_empty(),
                    "externalIdentifier" => pkg
                        .core
                        .supplied_by
                        .iter()
                        .chain(pkg.core.originated_by.iter())
                        .any(agent_has_identifier),
                    _ => false,
                }
                || bag_has_field(&pkg.unknown, name)
        }
        Element::File(f) => {
            (match name {
                "spdxId" => f.spdx_id.is_some(),
                "name" => !f.name.is_empty(),
                "contentType" => some_text(&f.content_type),
                "primaryPurpose" => f.primary_purpose.is_some(),
                _ => false,
            }) || bag_has_field(&f.unknown, name)
        }
        Element::Agent(a) => {
            (match name {
                "spdxId" => a.spdx_id.is_some(),
                "name" => !a.name.is_empty(),
                "externalIdentifier" => agent_has_identifier(a),
                _ => false,
            }) || bag_has_field(&a.unknown, name)
        }
        Element::Generic(g) => {
            (name == "spdxId" && g.spdx_id.is_some()) || bag_has_field(&g.properties, name)
        }
    };
    direct
}

fn core_has_field(core: &crate::model::PackageCore, name: &str) -> bool {
    match name {
        "spdxId" => core.spdx_id.is_some(),
        "name" => !core.name.is_empty(),
        "buildTime" => core.build_time.is_some(),
        "releaseTime" => core.release_time.is_some(),
        "validUntilTime" => core.valid_until_time.is_some(),
        "downloadLocation" => !core.download_location.is_empty(),
        "packageVersion" => !core.package_version.is_empty(),
        "primaryPurpose" => core.primary_purpose.is_some(),
        "suppliedBy" => !core.supplied_by.is_empty(),
        "originatedBy" => !core.originated_by.is_empty(),
        "supportLevel" => some_text(&core.support_level),
        "standardName" => some_text(&core.standard_name),
        "comment" => some_text(&core.comment),
        "description" => some_text(&core.description),
        _ => false,
    }
}

// Preserved properties are matched by exact wire key or by the key with
// a profile prefix (`software_packageUrl` matches `packageUrl`).
fn bag_has_field(bag: &PropertyBag, name: &str) -> bool {
    bag.iter().any(|(key, value)| {
        let stripped = key.rsplit('_').next().unwrap_or(key);
        (key == name || stripped == name) && !value.is_empty_content()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        AiPackage, DatasetPackage, Iri, PackageCore, Relationship, SoftwarePurpose,
    };
    use alloc::vec;

    fn id(text: &str) -> ElementId {
        Iri::new(text).unwrap()
    }

    fn framework() -> Framework {
        Framework {
            id: "test-fw".into(),
            name: "Test Framework".into(),
            requirements: vec![
                Requirement {
                    id: "r1".into(),
                    citation: "Section 1".into(),
                    description: "how the data were collected".into(),
                    mapped_paths: vec!["dataCollectionProcess".into()],
                    mappable: true,
                },
                Requirement {
                    id: "r2".into(),
                    citation: "Section 2".into(),
                    description: "intended purpose".into(),
                    mapped_paths: vec![
                        "primaryPurpose".into(),
                        "informationAboutApplication".into(),
                    ],
                    mappable: true,
                },
                Requirement {
                    id: "r3".into(),
                    citation: "Section 3".into(),
                    description: "testing participants".into(),
                    mapped_paths: vec![],
                    mappable: false,
                },
            ],
        }
    }

    #[test]
    fn data_collection_process_satisfies_fda_style_requirement() {
        let mut doc = SpdxDocument::new();
        doc.add_element(Element::Dataset(DatasetPackage {
            core: PackageCore {
                spdx_id: Some(id("https://example.com/ds")),
                ..Default::default()
            },
            data_collection_process: Some(
                "Collected by scraping data from https://example.com".into(),
            ),
            ..Default::default()
        }))
        .unwrap();
        let report = assess(&doc, &framework());
        assert_eq!(report.entries[0].status, CoverageStatus::Satisfied);
        assert_eq!(
            report.entries[0].evidence,
            vec![Evidence {
                element_id: Some(id("https://example.com/ds")),
                path: "dataCollectionProcess".into()
            }]
        );
    }

    #[test]
    fn empty_document_misses_every_mappable_requirement() {
        let report = assess(&SpdxDocument::new(), &framework());
        assert_eq!(report.entries[0].status, CoverageStatus::Missing);
        assert_eq!(report.entries[1].status, CoverageStatus::Missing);
        assert_eq!(report.entries[2].status, CoverageStatus::NotMappable);
        assert_eq!(report.mappable_total(), 2);
    }

    #[test]
    fn some_but_not_all_paths_is_partial() {
        let mut doc = SpdxDocument::new();
        doc.add_element(Element::Ai(AiPackage {
            core: PackageCore {
                spdx_id: Some(id("https://example.com/ai")),
                primary_purpose: Some(SoftwarePurpose::Model),
                ..Default::default()
            },
            ..Default::default()
        }))
        .unwrap();
        let report = assess(&doc, &framework());
        assert_eq!(report.entries[1].status, CoverageStatus::Partial);
    }

    #[test]
    fn adding_fields_never_regresses_status() {
        let mut doc = SpdxDocument::new();
        doc.add_element(Element::Ai(AiPackage {
            core: PackageCore {
                spdx_id: Some(id("https://example.com/ai")),
                primary_purpose: Some(SoftwarePurpose::Model),
                ..Default::default()
            },
            ..Default::default()
        }))
        .unwrap();
        let before = assess(&doc, &framework());

        let mut richer = SpdxDocument::new();
        richer
            .add_element(Element::Ai(AiPackage {
                core: PackageCore {
                    spdx_id: Some(id("https://example.com/ai")),
                    primary_purpose: Some(SoftwarePurpose::Model),
                    ..Default::default()
                },
                information_about_application: Some("vehicle identification".into()),
                ..Default::default()
            }))
            .unwrap();
        let after = assess(&richer, &framework());

        for (b, a) in before.entries.iter().zip(after.entries.iter()) {
            // CoverageStatus orders best-to-worst, so "no regression" is <=
            assert!(a.status <= b.status);
        }
        assert_eq!(after.entries[1].status, CoverageStatus::Satisfied);
    }

    #[test]
    fn relationship_selector_matches_model_and_opaque_nodes() {
        let mut doc = SpdxDocument::new();
        doc.add_relationship(Relationship::new(
            RelationshipType::TrainedOn,
            id("https://example.com/ai"),
            vec![id("https://example.com/ds")],
        ));
        let mut props = PropertyBag::new();
        props.insert(
            "relationshipType".into(),
            PropertyValue::Text("hasDocumentation".into()),
        );
        props.insert(
            "from".into(),
            PropertyValue::Text("https://example.com/ai".into()),
        );
        doc.add_element(Element::Generic(crate::model::GenericElement {
            type_tag: "Relationship".into(),
            spdx_id: None,
            properties: props,
        }))
        .unwrap();

        let trained = find_evidence(
            &doc,
            &"relationship:trainedOn".parse().unwrap(),
            "relationship:trainedOn",
        );
        assert_eq!(trained.len(), 1);
        let documentation = find_evidence(
            &doc,
            &"relationship:hasDocumentation".parse().unwrap(),
            "relationship:hasDocumentation",
        );
        assert_eq!(documentation.len(), 1);
    }

    #[test]
    fn passthrough_fields_match_preserved_properties() {
        let mut bag = PropertyBag::new();
        bag.insert(
            "packageUrl".into(),
            PropertyValue::Text("pkg:github/example/model@1.0".into()),
        );
        bag.insert(
            "software_externalRef".into(),
            PropertyValue::Array(vec![PropertyValue::Text("cpe:2.3:a:example:model".into())]),
        );
        let mut doc = SpdxDocument::new();
        doc.add_element(Element::Ai(AiPackage {
            core: PackageCore {
                spdx_id: Some(id("https://example.com/ai")),
                ..Default::default()
            },
            unknown: bag,
            ..Default::default()
        }))
        .unwrap();
        assert_eq!(
            find_evidence(&doc, &"packageUrl".parse().unwrap(), "packageUrl").len(),
            1
        );
        assert_eq!(
            find_evidence(&doc, &"externalRef".parse().unwrap(), "externalRef").len(),
            1
        );
        assert!(find_evidence(&doc, &"verifiedUsing".parse().unwrap(), "verifiedUsing").is_empty());
    }

    #[test]
    fn selector_vocabulary() {
        assert!(selector_is_known("dataCollectionProcess"));
        assert!(selector_is_known("externalRef"));
        assert!(selector_is_known("relationship:trainedOn"));
        assert!(selector_is_known("relationship:hasDocumentation"));
        assert!(!selector_is_known("notAField"));
        assert!(!selector_is_known("relationship:dependsOn"));
    }

    #[test]
    fn unmappable_requirements_carry_no_paths() {
        for req in framework().requirements {
            assert!(req.is_well_formed());
        }
    }
}
