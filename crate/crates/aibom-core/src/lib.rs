//! Core document model for SPDX 3.0 AI and Dataset bills of materials.
//!
//! This crate holds everything that does not touch the filesystem or a
//! serialization syntax: the typed element model (AI packages, dataset
//! packages, agents, files, relationships), the per-document element and
//! relationship graph, the profile-conformance rule engine, and the
//! regulatory-coverage assessment. The companion `aibomkit` crate layers
//! the JSON file format, bundled framework rulesets, fixtures, and the
//! command-line tool on top.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature only switches `std` back on for downstream convenience.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod compliance;
pub mod document;
pub mod model;
pub mod validator;

pub use document::{DocumentError, SpdxDocument, TargetStatus};
pub use model::{
    Agent, AgentKind, AiPackage, ConfidentialityLevel, CreationInfo, DatasetAvailability,
    DatasetPackage, DatasetType, DictionaryEntry, Element, ElementId, EnergyConsumption,
    EnergyConsumptionDescription, EnergyQuantity, EnergyUnit, EnumKind, FileArtifact,
    GenericElement, Iri, IriError, LicenseTarget, PackageCore, Presence, PropertyBag,
    PropertyValue, Relationship, RelationshipType, SafetyRisk, SoftwarePurpose, Timestamp,
    TimestampError, UnknownToken, LISTED_LICENSE_PREFIX, NONE_LICENSE_IRI,
    NO_ASSERTION_LICENSE_IRI,
};
pub use validator::{validate_document, Diagnostic, Profile, Rule, Severity};
