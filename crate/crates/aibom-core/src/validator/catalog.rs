//! The static rule catalog.
//!
//! Rule ids are stable API: diagnostics, fixtures, and downstream CI
//! configurations key on them. `AI-M-*` / `DS-M-*` mirror the mandatory
//! field lists of the two profiles row by row; `*-C-*` are cardinality
//! upper bounds; `EN-*` enum membership; `FMT-*` lexical formats;
//! `REL-*`, `DOC-*`, `SER-*` graph and serialization hygiene.

use super::Severity;

/// What class of node a rule applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleTarget {
    AiPackage,
    DatasetPackage,
    Relationship,
    Document,
    Any,
}

/// One conformance rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub severity: Severity,
    pub target: RuleTarget,
    pub summary: &'static str,
    /// Which profile requirement the rule enforces. Empty for plumbing
    /// rules that have no profile citation.
    pub citation: &'static str,
}

const fn rule(
    id: &'static str,
    severity: Severity,
    target: RuleTarget,
    summary: &'static str,
    citation: &'static str,
) -> Rule {
    Rule {
        id,
        severity,
        target,
        summary,
        citation,
    }
}

use RuleTarget::{AiPackage, Any, DatasetPackage, Document, Relationship};
use Severity::{Error, Info, Warning};

/// Every rule, in catalog order.
pub static CATALOG: &[Rule] = &[
    // AI Profile mandatory fields, one rule per row of the profile's
    // mandatory-field list for AIPackage.
    rule("AI-M-01", Error, AiPackage, "AIPackage is missing buildTime",
         "AI Profile mandatory fields: buildTime, Required(1..1)"),
    rule("AI-M-02", Error, AiPackage, "AIPackage is missing downloadLocation",
         "AI Profile mandatory fields: downloadLocation, Required(1..*)"),
    rule("AI-M-03", Error, AiPackage, "AIPackage is missing name",
         "AI Profile mandatory fields: name, Required(1..1)"),
    rule("AI-M-04", Error, AiPackage, "AIPackage is missing packageVersion",
         "AI Profile mandatory fields: packageVersion, Required(1..1)"),
    rule("AI-M-05", Error, AiPackage, "AIPackage is missing primaryPurpose",
         "AI Profile mandatory fields: primaryPurpose, Required(1..1)"),
    rule("AI-M-06", Error, AiPackage, "AIPackage is missing releaseTime",
         "AI Profile mandatory fields: releaseTime, Required(1..1)"),
    rule("AI-M-07", Error, AiPackage, "AIPackage is missing spdxId",
         "AI Profile mandatory fields: spdxId, Required(1..1)"),
    rule("AI-M-08", Error, AiPackage, "AIPackage is missing suppliedBy",
         "AI Profile mandatory fields: suppliedBy, Required(1..*)"),
    rule("AI-M-09", Error, AiPackage,
         "AIPackage must have exactly one hasConcludedLicense relationship",
         "AI Profile mandatory relationships: exactly one Relationship of type hasConcludedLicense with the package as its from property"),
    rule("AI-M-10", Error, AiPackage,
         "AIPackage must have exactly one hasDeclaredLicense relationship",
         "AI Profile mandatory relationships: exactly one Relationship of type hasDeclaredLicense with the package as its from property"),
    // Dataset Profile mandatory fields for DatasetPackage.
    rule("DS-M-01", Error, DatasetPackage, "DatasetPackage is missing buildTime",
         "Dataset Profile mandatory fields: buildTime, Required(1..1)"),
    rule("DS-M-02", Error, DatasetPackage, "DatasetPackage is missing datasetType",
         "Dataset Profile mandatory fields: datasetType, Required(1..1); a dataset may include multiple data types"),
    rule("DS-M-03", Error, DatasetPackage, "DatasetPackage is missing downloadLocation",
         "Dataset Profile mandatory fields: downloadLocation, Required(1..*)"),
    rule("DS-M-04", Error, DatasetPackage, "DatasetPackage is missing originatedBy",
         "Dataset Profile mandatory fields: originatedBy, Required(1..*); person, organization or tool that created the dataset"),
    rule("DS-M-05", Error, DatasetPackage, "DatasetPackage is missing packageVersion",
         "Dataset Profile mandatory fields: packageVersion, Required(1..1)"),
    rule("DS-M-06", Error, DatasetPackage, "DatasetPackage is missing primaryPurpose",
         "Dataset Profile mandatory fields: primaryPurpose, Required(1..1)"),
    rule("DS-M-07", Error, DatasetPackage, "DatasetPackage is missing name",
         "Dataset Profile mandatory fields: name, Required(1..1)"),
    rule("DS-M-08", Error, DatasetPackage, "DatasetPackage is missing releaseTime",
         "Dataset Profile mandatory fields: releaseTime, Required(1..1)"),
    rule("DS-M-09", Error, DatasetPackage, "DatasetPackage is missing spdxId",
         "Dataset Profile mandatory fields: spdxId, Required(1..1)"),
    rule("DS-M-10", Error, DatasetPackage,
         "DatasetPackage must have exactly one hasConcludedLicense relationship",
         "Dataset Profile mandatory relationships: exactly one Relationship of type hasConcludedLicense with the package as its from property"),
    rule("DS-M-11", Error, DatasetPackage,
         "DatasetPackage must have exactly one hasDeclaredLicense relationship",
         "Dataset Profile mandatory relationships: exactly one Relationship of type hasDeclaredLicense with the package as its from property"),
    // Cardinality upper bounds on optional AI Profile fields.
    rule("AI-C-01", Error, AiPackage, "autonomyType admits at most one value",
         "AI Profile optional fields: autonomyType, Optional(0..1)"),
    rule("AI-C-02", Error, AiPackage, "domain admits at most one value",
         "AI Profile optional fields: domain, Optional(0..1)"),
    rule("AI-C-03", Error, AiPackage, "energyConsumption admits at most one value",
         "AI Profile optional fields: energyConsumption, Optional(0..1)"),
    rule("AI-C-04", Error, AiPackage, "informationAboutTraining admits at most one value",
         "AI Profile optional fields: informationAboutTraining, Optional(0..1)"),
    rule("AI-C-05", Error, AiPackage, "informationAboutApplication admits at most one value",
         "AI Profile optional fields: informationAboutApplication, Optional(0..1)"),
    rule("AI-C-06", Error, AiPackage, "limitation admits at most one value",
         "AI Profile optional fields: limitation, Optional(0..1)"),
    rule("AI-C-07", Error, AiPackage, "safetyRiskAssessment admits at most one value",
         "AI Profile optional fields: safetyRiskAssessment, Optional(0..1)"),
    rule("AI-C-08", Error, AiPackage, "useSensitivePersonalInformation admits at most one value",
         "AI Profile optional fields: useSensitivePersonalInformation, Optional(0..1)"),
    rule("AI-C-09", Warning, AiPackage, "multiple trainedOn relationships from one package",
         "AI Profile optional relationships: trainedOn, Optional(0..1); the field description speaks of dataset(s), so multiples are flagged, not rejected"),
    rule("AI-C-10", Warning, AiPackage, "multiple testedOn relationships from one package",
         "AI Profile optional relationships: testedOn, Optional(0..1); the field description speaks of dataset(s), so multiples are flagged, not rejected"),
    // Cardinality upper bounds on optional Dataset Profile fields.
    rule("DS-C-01", Error, DatasetPackage, "anonymizationMethodUsed admits at most one value",
         "Dataset Profile optional fields: anonymizationMethodUsed, Optional(0..1)"),
    rule("DS-C-02", Error, DatasetPackage, "confidentialityLevel admits at most one value",
         "Dataset Profile optional fields: confidentialityLevel, Optional(0..1)"),
    rule("DS-C-03", Error, DatasetPackage, "dataCollectionProcess admits at most one value",
         "Dataset Profile optional fields: dataCollectionProcess, Optional(0..1)"),
    rule("DS-C-04", Error, DatasetPackage, "dataPreprocessing admits at most one value",
         "Dataset Profile optional fields: dataPreprocessing, Optional(0..1)"),
    rule("DS-C-05", Error, DatasetPackage, "datasetAvailability admits at most one value",
         "Dataset Profile optional fields: datasetAvailability, Optional(0..1)"),
    rule("DS-C-06", Error, DatasetPackage, "datasetNoise admits at most one value",
         "Dataset Profile optional fields: datasetNoise, Optional(0..1)"),
    rule("DS-C-07", Error, DatasetPackage, "datasetSize admits at most one value",
         "Dataset Profile optional fields: datasetSize, Optional(0..1)"),
    rule("DS-C-08", Error, DatasetPackage, "datasetUpdateMechanism admits at most one value",
         "Dataset Profile optional fields: datasetUpdateMechanism, Optional(0..1)"),
    rule("DS-C-09", Error, DatasetPackage, "hasSensitivePersonalInformation admits at most one value",
         "Dataset Profile optional fields: hasSensitivePersonalInformation, Optional(0..1)"),
    rule("DS-C-10", Error, DatasetPackage, "intendedUse admits at most one value",
         "Dataset Profile optional fields: intendedUse, Optional(0..1)"),
    rule("DS-C-11", Error, DatasetPackage, "knownBias admits at most one value",
         "Dataset Profile optional fields: knownBias, Optional(0..1)"),
    // Enumerated field membership.
    rule("EN-01", Error, Any, "primaryPurpose is not a SoftwarePurpose token",
         "primaryPurpose: select one of the SoftwarePurpose entries, e.g. application, archive, bom, ..."),
    rule("EN-02", Error, AiPackage, "autonomyType is not a PresenceType token",
         "autonomyType: select one from yes, no, noAssertion"),
    rule("EN-03", Error, AiPackage, "useSensitivePersonalInformation is not a PresenceType token",
         "useSensitivePersonalInformation: select one from yes, no, noAssertion"),
    rule("EN-04", Error, AiPackage, "safetyRiskAssessment is not a SafetyRiskAssessmentType token",
         "safetyRiskAssessment: select one from serious, high, medium, low"),
    rule("EN-05", Error, AiPackage, "energyUnit is not an EnergyUnitType token",
         "energyUnit: select one from kilowattHour, megajoule, other"),
    rule("EN-06", Error, DatasetPackage, "datasetType is not a DatasetType token",
         "datasetType: select one from audio, categorical, graph, image, noAssertion, numeric, other, sensor, structured, syntactic, text, timeseries, timestamp, video"),
    rule("EN-07", Error, DatasetPackage, "confidentialityLevel is not a ConfidentialityLevelType token",
         "confidentialityLevel: select one from red, amber, green, clear (Traffic Light Protocol)"),
    rule("EN-08", Error, DatasetPackage, "datasetAvailability is not a DatasetAvailabilityType token",
         "datasetAvailability: select one from clickthrough, directDownload, query, registration, scrapingScript"),
    rule("EN-09", Error, DatasetPackage, "hasSensitivePersonalInformation is not a PresenceType token",
         "hasSensitivePersonalInformation: select one from yes, no, noAssertion"),
    rule("EN-10", Warning, Relationship, "relationshipType is outside the AI/Dataset profile vocabulary; node kept opaque",
         "Relationship types used by the AI and Dataset profiles: contains, describes, hasConcludedLicense, hasDeclaredLicense, testedOn, trainedOn, other"),
    // Lexical formats.
    rule("FMT-01", Error, Any, "timestamp does not match YYYY-MM-DDThh:mm:ssZ",
         "DateTime values have second resolution, UTC zone, form YYYY-MM-DDThh:mm:ssZ"),
    rule("FMT-02", Error, Any, "value is not an absolute IRI",
         "spdxId and location fields are xsd:anyURI"),
    rule("FMT-03", Error, DatasetPackage, "datasetSize must be a non-negative integer",
         "datasetSize is xsd:nonNegativeInteger, measured in bytes"),
    rule("FMT-04", Error, AiPackage, "energyQuantity must be a non-negative decimal",
         "energyQuantity is xsd:decimal"),
    // Conditional energy constraint.
    rule("AI-E-01", Error, AiPackage, "energy consumption entry lacks energyQuantity or energyUnit",
         "if energyConsumption has a value, then energyQuantity and energyUnit are mandatory"),
    // Relationship structure.
    rule("REL-01", Error, Relationship, "relationship has no to target",
         "Relationship.to carries one or more target elements"),
    rule("REL-02", Error, Relationship, "license relationship points back at its own source",
         "license relationships run from the package to an AnyLicenseInfo target"),
    // Document-level hygiene (plumbing).
    rule("DOC-01", Warning, Document, "document declares no rootElement", ""),
    rule("DOC-02", Warning, Document, "document has no creationInfo", ""),
    rule("DOC-03", Warning, Document, "rootElement is not present in the element index", ""),
    rule("DOC-04", Error, Document, "duplicate spdxId; later element dropped", ""),
    rule("DOC-05", Warning, Document, "multiple SpdxDocument nodes; extras kept opaque", ""),
    // Serialization hygiene (plumbing).
    rule("SER-01", Info, Any, "unknown property preserved as-is", ""),
    rule("SER-02", Info, Any, "unknown element type preserved as-is", ""),
    rule("SER-03", Error, Any, "property has an unexpected JSON shape; value dropped", ""),
    rule("SER-04", Warning, Any, "agent-valued field entry is not an inline agent object; entry dropped", ""),
    rule("SER-05", Warning, Any, "relationship node is missing from/relationshipType; node kept opaque", ""),
    // Profile scoping.
    rule("DS-W-01", Warning, DatasetPackage, "DatasetPackage has no suppliedBy",
         "Common package fields list suppliedBy as mandatory for both package classes, but the Dataset Profile mandatory-field list omits it; absence is flagged, not rejected"),
];

/// The full static catalog.
pub fn rule_catalog() -> &'static [Rule] {
    CATALOG
}

/// Looks a rule up by id.
pub fn rule_by_id(id: &str) -> Option<&'static Rule> {
    CATALOG.iter().find(|r| r.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        for (i, a) in CATALOG.iter().enumerate() {
            for b in &CATALOG[i + 1..] {
                assert_ne!(a.id, b.id, "duplicate rule id");
            }
        }
    }

    #[test]
    fn autonomy_type_cardinality_rule_cites_upper_bound() {
        let r = rule_by_id("AI-C-01").unwrap();
        assert!(r.citation.contains("autonomyType"));
        assert!(r.citation.contains("Optional(0..1)"));
    }

    #[test]
    fn citations_present_outside_plumbing() {
        for r in CATALOG {
            let plumbing = r.id.starts_with("DOC-") || r.id.starts_with("SER-");
            if plumbing {
                assert!(r.citation.is_empty(), "{} should be plumbing", r.id);
            } else {
                assert!(!r.citation.is_empty(), "{} missing citation", r.id);
            }
        }
    }

    #[test]
    fn lookup_by_id() {
        assert_eq!(rule_by_id("AI-M-01").unwrap().id, "AI-M-01");
        assert!(rule_by_id("XX-99").is_none());
    }
}
