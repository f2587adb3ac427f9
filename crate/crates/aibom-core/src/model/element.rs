//! Element classes: packages, agents, files, relationships.
//!
//! Field optionality mirrors what documents can actually say, not what
//! conformant documents must say: a package missing `name` is
//! representable here and flagged by the validator. Empty strings and
//! empty lists count as absent.

use alloc::string::String;
use alloc::vec::Vec;

use super::enums::{
    AgentKind, ConfidentialityLevel, DatasetAvailability, DatasetType, EnergyUnit, Presence,
    RelationshipType, SafetyRisk, SoftwarePurpose,
};
use super::iri::{ElementId, Iri};
use super::timestamp::Timestamp;
use super::value::PropertyBag;

/// The person, organization, or tool behind an artifact.
///
/// Agents appear inline (in `suppliedBy`, `originatedBy`, `createdBy`)
/// and as standalone document elements; standalone ones carry an id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Agent {
    pub spdx_id: Option<ElementId>,
    pub kind: AgentKind,
    pub name: String,
    /// Opaque external identifiers (country codes, registry handles, ...).
    pub external_identifiers: Vec<String>,
    pub unknown: PropertyBag,
}

// not derived: the default must stay Organization, not the first variant
#[allow(clippy::derivable_impls)]
impl Default for AgentKind {
    fn default() -> Self {
        AgentKind::Organization
    }
}

impl Agent {
    pub fn organization(name: &str) -> Self {
        Agent {
            kind: AgentKind::Organization,
            name: String::from(name),
            ..Agent::default()
        }
    }

    pub fn person(name: &str) -> Self {
        Agent {
            kind: AgentKind::Person,
            name: String::from(name),
            ..Agent::default()
        }
    }

    pub fn tool(name: &str) -> Self {
        Agent {
            kind: AgentKind::Tool,
            name: String::from(name),
            ..Agent::default()
        }
    }
}

/// Provenance of the document itself.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CreationInfo {
    pub created: Option<Timestamp>,
    pub created_by: Vec<Agent>,
    pub unknown: PropertyBag,
}

/// One key/value record (hyperparameters, metrics, sensors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryEntry {
    pub key: String,
    pub value: String,
}

impl DictionaryEntry {
    pub fn new(key: &str, value: &str) -> Self {
        DictionaryEntry {
            key: String::from(key),
            value: String::from(value),
        }
    }
}

/// A non-negative decimal, kept in its exact source lexical form so
/// serialization re-emits `"0.042"` rather than some rescaled spelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyQuantity(String);

/// Why a quantity string was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantityError {
    NotDecimal,
    Negative,
}

impl EnergyQuantity {
    /// Accepts the `xsd:decimal` lexical space restricted to non-negative
    /// values: digits with at most one decimal point, no exponent.
    pub fn new(text: &str) -> Result<Self, QuantityError> {
        if let Some(rest) = text.strip_prefix('-') {
            // separate check so "-1" reports sign, not shape
            if is_decimal(rest) {
                return Err(QuantityError::Negative);
            }
            return Err(QuantityError::NotDecimal);
        }
        if !is_decimal(text) {
            return Err(QuantityError::NotDecimal);
        }
        Ok(EnergyQuantity(String::from(text)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_decimal(text: &str) -> bool {
    let mut digits = 0usize;
    let mut dots = 0usize;
    for c in text.chars() {
        match c {
            '0'..='9' => digits += 1,
            '.' => dots += 1,
            _ => return false,
        }
    }
    digits > 0 && dots <= 1
}

/// One measured or estimated energy figure. Quantity and unit are
/// mandatory whenever the record exists; they are optional here so the
/// validator can report the violation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnergyConsumptionDescription {
    pub energy_quantity: Option<EnergyQuantity>,
    pub energy_unit: Option<EnergyUnit>,
    pub comment: Option<String>,
    pub unknown: PropertyBag,
}

/// Energy consumed across the model lifecycle phases.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnergyConsumption {
    pub training: Vec<EnergyConsumptionDescription>,
    pub finetuning: Vec<EnergyConsumptionDescription>,
    pub inference: Vec<EnergyConsumptionDescription>,
    pub unknown: PropertyBag,
}

impl EnergyConsumption {
    pub fn descriptions(&self) -> impl Iterator<Item = &EnergyConsumptionDescription> {
        self.training
            .iter()
            .chain(self.finetuning.iter())
            .chain(self.inference.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.training.is_empty() && self.finetuning.is_empty() && self.inference.is_empty()
    }
}

/// Fields shared by AI and dataset packages (core/software profiles).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PackageCore {
    pub spdx_id: Option<ElementId>,
    pub name: String,
    pub package_version: String,
    pub build_time: Option<Timestamp>,
    pub release_time: Option<Timestamp>,
    pub valid_until_time: Option<Timestamp>,
    pub download_location: Vec<Iri>,
    pub primary_purpose: Option<SoftwarePurpose>,
    pub supplied_by: Vec<Agent>,
    pub originated_by: Vec<Agent>,
    pub support_level: Option<String>,
    pub standard_name: Option<String>,
    pub comment: Option<String>,
    pub description: Option<String>,
}

/// A package carrying AI-profile fields.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AiPackage {
    pub core: PackageCore,
    pub autonomy_type: Option<Presence>,
    pub domain: Option<String>,
    pub energy_consumption: Option<EnergyConsumption>,
    pub hyperparameter: Vec<DictionaryEntry>,
    pub information_about_training: Option<String>,
    pub information_about_application: Option<String>,
    pub limitation: Option<String>,
    pub metric: Vec<DictionaryEntry>,
    pub metric_decision_threshold: Vec<DictionaryEntry>,
    pub model_data_preprocessing: Vec<String>,
    pub model_explainability: Vec<String>,
    pub safety_risk_assessment: Option<SafetyRisk>,
    pub standard_compliance: Vec<String>,
    pub type_of_model: Vec<String>,
    pub use_sensitive_personal_information: Option<Presence>,
    pub unknown: PropertyBag,
}

/// A package carrying Dataset-profile fields.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DatasetPackage {
    pub core: PackageCore,
    pub dataset_type: Vec<DatasetType>,
    pub anonymization_method_used: Option<String>,
    pub confidentiality_level: Option<ConfidentialityLevel>,
    pub data_collection_process: Option<String>,
    pub data_preprocessing: Option<String>,
    pub dataset_availability: Option<DatasetAvailability>,
    pub dataset_noise: Option<String>,
    /// Size in bytes.
    pub dataset_size: Option<u64>,
    pub dataset_update_mechanism: Option<String>,
    pub has_sensitive_personal_information: Option<Presence>,
    pub intended_use: Option<String>,
    pub known_bias: Option<String>,
    pub sensor: Vec<DictionaryEntry>,
    pub unknown: PropertyBag,
}

/// A plain file element (data files, codebooks, documentation).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FileArtifact {
    pub spdx_id: Option<ElementId>,
    pub name: String,
    /// Media type, e.g. `text/csv;charset=UTF-8`.
    pub content_type: Option<String>,
    pub primary_purpose: Option<SoftwarePurpose>,
    pub unknown: PropertyBag,
}

/// A node of a type this model does not interpret, preserved verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericElement {
    pub type_tag: String,
    pub spdx_id: Option<ElementId>,
    pub properties: PropertyBag,
}

/// A typed, directed edge between elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relationship {
    pub spdx_id: Option<ElementId>,
    pub relationship_type: RelationshipType,
    pub from: ElementId,
    pub to: Vec<ElementId>,
    pub description: Option<String>,
    pub unknown: PropertyBag,
}

impl Relationship {
    pub fn new(relationship_type: RelationshipType, from: ElementId, to: Vec<ElementId>) -> Self {
        Relationship {
            spdx_id: None,
            relationship_type,
            from,
            to,
            description: None,
            unknown: PropertyBag::new(),
        }
    }
}

/// Any element that can sit in a document's element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Ai(AiPackage),
    Dataset(DatasetPackage),
    File(FileArtifact),
    Agent(Agent),
    Generic(GenericElement),
}

impl Element {
    pub fn spdx_id(&self) -> Option<&ElementId> {
        match self {
            Element::Ai(p) => p.core.spdx_id.as_ref(),
            Element::Dataset(p) => p.core.spdx_id.as_ref(),
            Element::File(f) => f.spdx_id.as_ref(),
            Element::Agent(a) => a.spdx_id.as_ref(),
            Element::Generic(g) => g.spdx_id.as_ref(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        let name = match self {
            Element::Ai(p) => &p.core.name,
            Element::Dataset(p) => &p.core.name,
            Element::File(f) => &f.name,
            Element::Agent(a) => &a.name,
            Element::Generic(_) => return None,
        };
        if name.is_empty() {
            None
        } else {
            Some(name)
        }
    }

    /// Short class name for listings and diagnostics.
    pub fn kind_name(&self) -> &str {
        match self {
            Element::Ai(_) => "AIPackage",
            Element::Dataset(_) => "DatasetPackage",
            Element::File(_) => "File",
            Element::Agent(a) => a.kind.as_str(),
            Element::Generic(g) => &g.type_tag,
        }
    }
}
