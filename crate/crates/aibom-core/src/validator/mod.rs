//! Profile-conformance rule engine.
//!
//! The validator is a pure function of (document, profiles): it never
//! mutates the document and the same input yields the same diagnostic
//! list, ordered by (element document order, rule id). Problems are
//! diagnostics, not failures; an empty list means conformant.

mod catalog;

pub use catalog::{rule_by_id, rule_catalog, Rule, RuleTarget};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::document::SpdxDocument;
use crate::model::{
    AiPackage, DatasetPackage, Element, ElementId, EnergyConsumptionDescription, RelationshipType,
};

/// Diagnostic severity. Only `Error` makes a document non-conformant;
/// warnings and infos report "conformant with notes".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl core::fmt::Display for Severity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which profiles a document is being checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Profile {
    Ai,
    Dataset,
}

impl Profile {
    pub fn token(self) -> &'static str {
        match self {
            Profile::Ai => "ai",
            Profile::Dataset => "dataset",
        }
    }
}

/// One validator or reader finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub rule_id: &'static str,
    pub severity: Severity,
    pub element_id: Option<ElementId>,
    /// Where in the element the problem sits, in wire-format terms,
    /// e.g. `buildTime` or `ai_energyConsumption.ai_trainingEnergyConsumption[0].ai_energyUnit`.
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    /// Builds a diagnostic for a catalog rule, inheriting its severity.
    pub fn for_rule(rule_id: &'static str, element_id: Option<ElementId>, path: &str) -> Self {
        let rule = rule_by_id(rule_id).expect("diagnostic references a cataloged rule");
        Diagnostic {
            rule_id: rule.id,
            severity: rule.severity,
            element_id,
            path: path.to_string(),
            message: rule.summary.to_string(),
        }
    }

    pub fn with_message(mut self, message: String) -> Self {
        self.message = message;
        self
    }

    fn downgrade_to_warning(&mut self) {
        if self.severity == Severity::Error {
            self.severity = Severity::Warning;
        }
    }
}

/// Missing/empty mandatory fields of one package. One diagnostic per
/// missing field; empty strings and empty lists count as absent.
/// License relationships are checked separately since they need the
/// whole document.
pub fn check_mandatory_fields(element: &Element) -> Vec<Diagnostic> {
    match element {
        Element::Ai(pkg) => check_mandatory_ai(pkg),
        Element::Dataset(pkg) => check_mandatory_dataset(pkg),
        _ => Vec::new(),
    }
}

fn check_mandatory_ai(pkg: &AiPackage) -> Vec<Diagnostic> {
    let id = pkg.core.spdx_id.clone();
    let mut out = Vec::new();
    let mut miss = |rule: &'static str, path: &str| {
        out.push(Diagnostic::for_rule(rule, id.clone(), path));
    };
    if pkg.core.build_time.is_none() {
        miss("AI-M-01", "buildTime");
    }
    if pkg.core.download_location.is_empty() {
        miss("AI-M-02", "downloadLocation");
    }
    if pkg.core.name.is_empty() {
        miss("AI-M-03", "name");
    }
    if pkg.core.package_version.is_empty() {
        miss("AI-M-04", "packageVersion");
    }
    if pkg.core.primary_purpose.is_none() {
        miss("AI-M-05", "primaryPurpose");
    }
    if pkg.core.release_time.is_none() {
        miss("AI-M-06", "releaseTime");
    }
    if pkg.core.spdx_id.is_none() {
        miss("AI-M-07", "spdxId");
    }
    if pkg.core.supplied_by.is_empty() {
        miss("AI-M-08", "suppliedBy");
    }
    out
}

fn check_mandatory_dataset(pkg: &DatasetPackage) -> Vec<Diagnostic> {
    let id = pkg.core.spdx_id.clone();
    let mut out = Vec::new();
    let mut miss = |rule: &'static str, path: &str| {
        out.push(Diagnostic::for_rule(rule, id.clone(), path));
    };
    if pkg.core.build_time.is_none() {
        miss("DS-M-01", "buildTime");
    }
    if pkg.dataset_type.is_empty() {
        miss("DS-M-02", "dataset_datasetType");
    }
    if pkg.core.download_location.is_empty() {
        miss("DS-M-03", "downloadLocation");
    }
    if pkg.core.originated_by.is_empty() {
        miss("DS-M-04", "originatedBy");
    }
    if pkg.core.package_version.is_empty() {
        miss("DS-M-05", "packageVersion");
    }
    if pkg.core.primary_purpose.is_none() {
        miss("DS-M-06", "primaryPurpose");
    }
    if pkg.core.name.is_empty() {
        miss("DS-M-07", "name");
    }
    if pkg.core.release_time.is_none() {
        miss("DS-M-08", "releaseTime");
    }
    if pkg.core.spdx_id.is_none() {
        miss("DS-M-09", "spdxId");
    }
    out
}

/// Exactly-one checks for both license relationship kinds of one package.
///
/// Counts relationships, not license values: a single relationship with
/// several `to` targets satisfies the constraint.
pub fn check_license_relationships(doc: &SpdxDocument, pkg_id: &ElementId) -> Vec<Diagnostic> {
    let is_ai = matches!(doc.element(pkg_id), Some(Element::Ai(_)));
    let (concluded_rule, declared_rule) = if is_ai {
        ("AI-M-09", "AI-M-10")
    } else {
        ("DS-M-10", "DS-M-11")
    };
    let mut out = Vec::new();
    for (kind, rule, path) in [
        (
            RelationshipType::HasConcludedLicense,
            concluded_rule,
            "hasConcludedLicense",
        ),
        (
            RelationshipType::HasDeclaredLicense,
            declared_rule,
            "hasDeclaredLicense",
        ),
    ] {
        let count = doc.relationships_from(pkg_id, Some(kind)).len();
        if count != 1 {
            out.push(
                Diagnostic::for_rule(rule, Some(pkg_id.clone()), path).with_message(format!(
                    "expected exactly one {} relationship, found {}",
                    kind, count
                )),
            );
        }
    }
    out
}

/// Flags every energy consumption entry that lacks a quantity or a unit.
/// Vacuously clean when the package records no energy consumption.
pub fn check_conditional_energy(pkg: &AiPackage) -> Vec<Diagnostic> {
    let Some(energy) = &pkg.energy_consumption else {
        return Vec::new();
    };
    let id = pkg.core.spdx_id.clone();
    let mut out = Vec::new();
    let mut walk = |phase: &str, descriptions: &[EnergyConsumptionDescription]| {
        for (i, desc) in descriptions.iter().enumerate() {
            let base = format!("ai_energyConsumption.{}[{}]", phase, i);
            if desc.energy_quantity.is_none() {
                out.push(Diagnostic::for_rule(
                    "AI-E-01",
                    id.clone(),
                    &format!("{}.ai_energyQuantity", base),
                ));
            }
            if desc.energy_unit.is_none() {
                out.push(Diagnostic::for_rule(
                    "AI-E-01",
                    id.clone(),
                    &format!("{}.ai_energyUnit", base),
                ));
            }
        }
    };
    walk("ai_trainingEnergyConsumption", &energy.training);
    walk("ai_finetuningEnergyConsumption", &energy.finetuning);
    walk("ai_inferenceEnergyConsumption", &energy.inference);
    out
}

/// Runs every applicable rule over a frozen document.
///
/// Packages of a class whose profile is not in `profiles` are still
/// structurally checked, but their error findings are downgraded to
/// warnings. Diagnostics come back ordered by (document order, rule id);
/// an empty list means conformant.
pub fn validate_document(doc: &SpdxDocument, profiles: &[Profile]) -> Vec<Diagnostic> {
    // order key: 0 = document level, 1 + element index, then relationships
    let mut keyed: Vec<(usize, Diagnostic)> = Vec::new();

    if doc.creation_info.is_none() {
        keyed.push((0, Diagnostic::for_rule("DOC-02", None, "creationInfo")));
    }
    if doc.root_elements.is_empty() {
        keyed.push((0, Diagnostic::for_rule("DOC-01", None, "rootElement")));
    } else {
        for root in &doc.root_elements {
            if !doc.contains(root) {
                keyed.push((
                    0,
                    Diagnostic::for_rule("DOC-03", Some(root.clone()), "rootElement")
                        .with_message(format!("rootElement {} is not in this document", root)),
                ));
            }
        }
    }

    for (index, element) in doc.elements().iter().enumerate() {
        let order = 1 + index;
        let mut found: Vec<Diagnostic> = Vec::new();
        let declared = match element {
            Element::Ai(pkg) => {
                found.extend(check_mandatory_ai(pkg));
                found.extend(check_conditional_energy(pkg));
                if let Some(id) = &pkg.core.spdx_id {
                    found.extend(check_license_relationships(doc, id));
                    for (rule, kind, path) in [
                        ("AI-C-09", RelationshipType::TrainedOn, "trainedOn"),
                        ("AI-C-10", RelationshipType::TestedOn, "testedOn"),
                    ] {
                        let count = doc.relationships_from(id, Some(kind)).len();
                        if count > 1 {
                            found.push(
                                Diagnostic::for_rule(rule, Some(id.clone()), path).with_message(
                                    format!("found {} {} relationships", count, kind),
                                ),
                            );
                        }
                    }
                } else {
                    found.extend(license_errors_for_anonymous(true));
                }
                profiles.contains(&Profile::Ai)
            }
            Element::Dataset(pkg) => {
                found.extend(check_mandatory_dataset(pkg));
                if let Some(id) = &pkg.core.spdx_id {
                    found.extend(check_license_relationships(doc, id));
                } else {
                    found.extend(license_errors_for_anonymous(false));
                }
                if pkg.core.supplied_by.is_empty() {
                    found.push(Diagnostic::for_rule(
                        "DS-W-01",
                        pkg.core.spdx_id.clone(),
                        "suppliedBy",
                    ));
                }
                profiles.contains(&Profile::Dataset)
            }
            _ => true,
        };
        if !declared {
            for d in &mut found {
                d.downgrade_to_warning();
            }
        }
        keyed.extend(found.into_iter().map(|d| (order, d)));
    }

    let relationship_base = 1 + doc.elements().len();
    for (index, rel) in doc.relationships().iter().enumerate() {
        let order = relationship_base + index;
        if rel.to.is_empty() {
            keyed.push((
                order,
                Diagnostic::for_rule("REL-01", rel.spdx_id.clone(), "to").with_message(format!(
                    "{} relationship from {} has no target",
                    rel.relationship_type, rel.from
                )),
            ));
        }
        if rel.relationship_type.is_license() && rel.to.contains(&rel.from) {
            keyed.push((
                order,
                Diagnostic::for_rule("REL-02", rel.spdx_id.clone(), "to").with_message(format!(
                    "{} relationship from {} lists its own source as target",
                    rel.relationship_type, rel.from
                )),
            ));
        }
    }

    keyed.sort_by(|(ka, da), (kb, db)| ka.cmp(kb).then_with(|| da.rule_id.cmp(db.rule_id)));
    keyed.into_iter().map(|(_, d)| d).collect()
}

// A package without an spdxId cannot be the source of any relationship,
// so both exactly-one license constraints fail at count zero.
fn license_errors_for_anonymous(is_ai: bool) -> Vec<Diagnostic> {
    let (concluded, declared) = if is_ai {
        ("AI-M-09", "AI-M-10")
    } else {
        ("DS-M-10", "DS-M-11")
    };
    alloc::vec![
        Diagnostic::for_rule(concluded, None, "hasConcludedLicense").with_message(
            "expected exactly one hasConcludedLicense relationship, found 0".to_string()
        ),
        Diagnostic::for_rule(declared, None, "hasDeclaredLicense").with_message(
            "expected exactly one hasDeclaredLicense relationship, found 0".to_string()
        ),
    ]
}

/// True when no diagnostic is an error.
pub fn is_conformant(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().all(|d| d.severity != Severity::Error)
}
