//! Closed vocabularies used by the AI and Dataset profiles.
//!
//! Token matching is exact and case-sensitive everywhere: the profiles
//! publish lowercase/camelCase tokens and other producers rely on them
//! verbatim, so `"Yes"` or `"Kilowatthour"` are rejected rather than
//! silently normalized.

use alloc::string::{String, ToString};
use core::fmt;

/// Names one of the closed vocabularies, for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumKind {
    Presence,
    SoftwarePurpose,
    DatasetType,
    EnergyUnit,
    SafetyRisk,
    ConfidentialityLevel,
    DatasetAvailability,
    RelationshipType,
    AgentKind,
}

impl EnumKind {
    pub fn name(self) -> &'static str {
        match self {
            EnumKind::Presence => "PresenceType",
            EnumKind::SoftwarePurpose => "SoftwarePurpose",
            EnumKind::DatasetType => "DatasetType",
            EnumKind::EnergyUnit => "EnergyUnitType",
            EnumKind::SafetyRisk => "SafetyRiskAssessmentType",
            EnumKind::ConfidentialityLevel => "ConfidentialityLevelType",
            EnumKind::DatasetAvailability => "DatasetAvailabilityType",
            EnumKind::RelationshipType => "RelationshipType",
            EnumKind::AgentKind => "AgentKind",
        }
    }
}

impl fmt::Display for EnumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A token that is not a member of the vocabulary it was parsed against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownToken {
    pub kind: EnumKind,
    pub token: String,
}

impl UnknownToken {
    fn new(kind: EnumKind, token: &str) -> Self {
        UnknownToken {
            kind,
            token: token.to_string(),
        }
    }
}

impl fmt::Display for UnknownToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown {} token {:?}", self.kind, self.token)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for UnknownToken {}

macro_rules! token_enum {
    (
        $(#[$meta:meta])*
        $name:ident, $kind:ident {
            $($variant:ident => $token:literal,)+
        }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name {
            $($variant,)+
        }

        impl $name {
            /// Every member, in profile order.
            pub const ALL: &'static [$name] = &[$($name::$variant,)+];

            /// The exact serialized token.
            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $token,)+
                }
            }
        }

        impl core::str::FromStr for $name {
            type Err = UnknownToken;

            fn from_str(token: &str) -> Result<Self, UnknownToken> {
                match token {
                    $($token => Ok($name::$variant),)+
                    _ => Err(UnknownToken::new(EnumKind::$kind, token)),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

token_enum! {
    /// Three-valued assertion for facts a producer may not know.
    Presence, Presence {
        Yes => "yes",
        No => "no",
        NoAssertion => "noAssertion",
    }
}

token_enum! {
    /// Primary intended function of a software artifact.
    SoftwarePurpose, SoftwarePurpose {
        Application => "application",
        Archive => "archive",
        Bom => "bom",
        Configuration => "configuration",
        Container => "container",
        Data => "data",
        Device => "device",
        DeviceDriver => "deviceDriver",
        DiskImage => "diskImage",
        Documentation => "documentation",
        Evidence => "evidence",
        Executable => "executable",
        File => "file",
        FilesystemImage => "filesystemImage",
        Firmware => "firmware",
        Framework => "framework",
        Install => "install",
        Library => "library",
        Manifest => "manifest",
        Model => "model",
        Module => "module",
        OperatingSystem => "operatingSystem",
        Other => "other",
        Patch => "patch",
        Platform => "platform",
        Requirement => "requirement",
        Source => "source",
        Specification => "specification",
        Test => "test",
    }
}

token_enum! {
    /// Kinds of data contained in a dataset.
    DatasetType, DatasetType {
        Audio => "audio",
        Categorical => "categorical",
        Graph => "graph",
        Image => "image",
        NoAssertion => "noAssertion",
        Numeric => "numeric",
        Other => "other",
        Sensor => "sensor",
        Structured => "structured",
        Syntactic => "syntactic",
        Text => "text",
        Timeseries => "timeseries",
        Timestamp => "timestamp",
        Video => "video",
    }
}

token_enum! {
    /// Unit for an energy consumption measurement.
    EnergyUnit, EnergyUnit {
        KilowattHour => "kilowattHour",
        Megajoule => "megajoule",
        Other => "other",
    }
}

token_enum! {
    /// General safety risk classification of an AI system.
    SafetyRisk, SafetyRisk {
        Serious => "serious",
        High => "high",
        Medium => "medium",
        Low => "low",
    }
}

token_enum! {
    /// Traffic Light Protocol sharing level for dataset contents.
    ConfidentialityLevel, ConfidentialityLevel {
        Red => "red",
        Amber => "amber",
        Green => "green",
        Clear => "clear",
    }
}

token_enum! {
    /// How a dataset can be obtained.
    DatasetAvailability, DatasetAvailability {
        Clickthrough => "clickthrough",
        DirectDownload => "directDownload",
        Query => "query",
        Registration => "registration",
        ScrapingScript => "scrapingScript",
    }
}

token_enum! {
    /// Relationship edge semantics used by the AI and Dataset profiles.
    RelationshipType, RelationshipType {
        Contains => "contains",
        Describes => "describes",
        HasConcludedLicense => "hasConcludedLicense",
        HasDeclaredLicense => "hasDeclaredLicense",
        TestedOn => "testedOn",
        TrainedOn => "trainedOn",
        Other => "other",
    }
}

impl RelationshipType {
    /// License edges carry an exactly-one constraint per package and may
    /// not point back at their own source.
    pub fn is_license(self) -> bool {
        matches!(
            self,
            RelationshipType::HasConcludedLicense | RelationshipType::HasDeclaredLicense
        )
    }
}

token_enum! {
    /// The class of an agent: who supplied, created, or originated something.
    AgentKind, AgentKind {
        Person => "Person",
        Organization => "Organization",
        Tool => "Tool",
    }
}
