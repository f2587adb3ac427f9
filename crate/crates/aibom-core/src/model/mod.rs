//! Domain types shared by every other module.

mod element;
mod enums;
mod iri;
mod timestamp;
mod value;

pub use element::{
    Agent, AiPackage, CreationInfo, DatasetPackage, DictionaryEntry, Element, EnergyConsumption,
    EnergyConsumptionDescription, EnergyQuantity, FileArtifact, GenericElement, PackageCore,
    QuantityError, Relationship,
};
pub use enums::{
    AgentKind, ConfidentialityLevel, DatasetAvailability, DatasetType, EnergyUnit, EnumKind,
    Presence, RelationshipType, SafetyRisk, SoftwarePurpose, UnknownToken,
};
pub use iri::{
    ElementId, Iri, IriError, LicenseTarget, LISTED_LICENSE_PREFIX, NONE_LICENSE_IRI,
    NO_ASSERTION_LICENSE_IRI,
};
pub use timestamp::{Timestamp, TimestampError};
pub use value::{PropertyBag, PropertyValue};
