//! Embedded test corpus: reconstructions of two published example BOMs
//! (a handwritten-text-recognition system and the CO2 emissions
//! dataset), a fully populated coverage fixture, and one small fixture
//! per documented field syntax example.
//!
//! Every fixture declares what validation must find. The snippet
//! fixtures are single nodes, so their expected errors are the
//! mandatory-field sets minus whatever the snippet provides; the
//! mandatory sets are frozen here, independent of the validator.

use aibom_core::SpdxDocument;
use thiserror::Error;

use crate::json::read_document;

/// The AI Profile's mandatory entries for AIPackage, one rule per row.
pub const AI_MANDATORY_RULES: [&str; 10] = [
    "AI-M-01", "AI-M-02", "AI-M-03", "AI-M-04", "AI-M-05", "AI-M-06", "AI-M-07", "AI-M-08",
    "AI-M-09", "AI-M-10",
];

/// The Dataset Profile's mandatory entries for DatasetPackage.
pub const DATASET_MANDATORY_RULES: [&str; 11] = [
    "DS-M-01", "DS-M-02", "DS-M-03", "DS-M-04", "DS-M-05", "DS-M-06", "DS-M-07", "DS-M-08",
    "DS-M-09", "DS-M-10", "DS-M-11",
];

/// Declared validation outcome of a fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// No error-severity diagnostics at all.
    Conformant,
    /// A bare AIPackage node: every mandatory entry fails except the
    /// listed rule ids (the fields the snippet supplies).
    AiPackageProviding(&'static [&'static str]),
    /// A bare DatasetPackage node, same convention.
    DatasetPackageProviding(&'static [&'static str]),
}

impl Expectation {
    /// The error rule ids validation must produce, sorted.
    pub fn expected_error_rules(&self) -> Vec<&'static str> {
        let except: &[&str] = match self {
            Expectation::Conformant => return Vec::new(),
            Expectation::AiPackageProviding(provided) => {
                let mut rules: Vec<&'static str> = AI_MANDATORY_RULES
                    .iter()
                    .filter(|r| !provided.contains(r))
                    .copied()
                    .collect();
                rules.sort_unstable();
                return rules;
            }
            Expectation::DatasetPackageProviding(provided) => provided,
        };
        let mut rules: Vec<&'static str> = DATASET_MANDATORY_RULES
            .iter()
            .filter(|r| !except.contains(r))
            .copied()
            .collect();
        rules.sort_unstable();
        rules
    }
}

/// One corpus entry.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub bytes: &'static str,
    pub expectation: Expectation,
}

use Expectation::{AiPackageProviding as Ai, Conformant, DatasetPackageProviding as Ds};

macro_rules! snippet {
    ($name:literal, $file:literal, $expectation:expr) => {
        Fixture {
            name: $name,
            bytes: include_str!(concat!("../fixtures/snippets/", $file)),
            expectation: $expectation,
        }
    };
}

/// The whole corpus, document fixtures first.
pub static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "simplehtr",
        bytes: include_str!("../fixtures/simplehtr.spdx.json"),
        expectation: Conformant,
    },
    Fixture {
        name: "co2",
        bytes: include_str!("../fixtures/co2.spdx.json"),
        expectation: Conformant,
    },
    Fixture {
        name: "eu-ai-act-full",
        bytes: include_str!("../fixtures/eu-ai-act-full.spdx.json"),
        expectation: Conformant,
    },
    snippet!("snippet-spdx-id", "01-spdx-id.json", Ai(&["AI-M-07"])),
    snippet!("snippet-name", "02-name.json", Ai(&["AI-M-03"])),
    snippet!("snippet-build-time", "03-build-time.json", Ai(&["AI-M-01"])),
    snippet!(
        "snippet-download-location",
        "04-download-location.json",
        Ai(&["AI-M-02"])
    ),
    snippet!(
        "snippet-package-version",
        "05-package-version.json",
        Ai(&["AI-M-04"])
    ),
    snippet!(
        "snippet-primary-purpose",
        "06-primary-purpose.json",
        Ai(&["AI-M-05"])
    ),
    snippet!(
        "snippet-release-time",
        "07-release-time.json",
        Ds(&["DS-M-08"])
    ),
    snippet!(
        "snippet-supplied-by",
        "08-supplied-by.json",
        Ai(&["AI-M-08"])
    ),
    snippet!(
        "snippet-has-concluded-license",
        "09-has-concluded-license.json",
        Conformant
    ),
    snippet!(
        "snippet-has-declared-license",
        "10-has-declared-license.json",
        Conformant
    ),
    snippet!("snippet-autonomy-type", "11-autonomy-type.json", Ai(&[])),
    snippet!("snippet-domain", "12-domain.json", Ai(&[])),
    snippet!(
        "snippet-energy-consumption",
        "13-energy-consumption.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-energy-quantity-unit",
        "14-energy-quantity-unit.json",
        Conformant
    ),
    snippet!(
        "snippet-finetuning-energy",
        "15-finetuning-energy.json",
        Conformant
    ),
    snippet!("snippet-hyperparameter", "16-hyperparameter.json", Ai(&[])),
    snippet!(
        "snippet-inference-energy",
        "17-inference-energy.json",
        Conformant
    ),
    snippet!(
        "snippet-information-about-application",
        "18-information-about-application.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-information-about-training",
        "19-information-about-training.json",
        Ai(&[])
    ),
    snippet!("snippet-limitation", "20-limitation.json", Ai(&[])),
    snippet!("snippet-metric", "21-metric.json", Ai(&[])),
    snippet!(
        "snippet-metric-decision-threshold",
        "22-metric-decision-threshold.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-model-data-preprocessing",
        "23-model-data-preprocessing.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-model-explainability",
        "24-model-explainability.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-safety-risk-assessment",
        "25-safety-risk-assessment.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-standard-compliance",
        "26-standard-compliance.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-training-energy",
        "27-training-energy.json",
        Conformant
    ),
    snippet!("snippet-type-of-model", "28-type-of-model.json", Ai(&[])),
    snippet!(
        "snippet-use-sensitive-personal-information",
        "29-use-sensitive-personal-information.json",
        Ai(&[])
    ),
    snippet!(
        "snippet-anonymization-method-used",
        "30-anonymization-method-used.json",
        Ds(&[])
    ),
    snippet!(
        "snippet-confidentiality-level",
        "31-confidentiality-level.json",
        Ds(&[])
    ),
    snippet!(
        "snippet-data-collection-process",
        "32-data-collection-process.json",
        Ds(&[])
    ),
    snippet!(
        "snippet-data-preprocessing",
        "33-data-preprocessing.json",
        Ds(&[])
    ),
    snippet!(
        "snippet-dataset-availability",
        "34-dataset-availability.json",
        Ds(&[])
    ),
    snippet!("snippet-dataset-noise", "35-dataset-noise.json", Ds(&[])),
    snippet!("snippet-dataset-size", "36-dataset-size.json", Ds(&[])),
    snippet!(
        "snippet-dataset-type",
        "37-dataset-type.json",
        Ds(&["DS-M-02"])
    ),
    snippet!(
        "snippet-dataset-update-mechanism",
        "38-dataset-update-mechanism.json",
        Ds(&[])
    ),
    snippet!(
        "snippet-has-sensitive-personal-information",
        "39-has-sensitive-personal-information.json",
        Ds(&[])
    ),
    snippet!("snippet-intended-use", "40-intended-use.json", Ds(&[])),
    snippet!("snippet-known-bias", "41-known-bias.json", Ds(&[])),
    snippet!("snippet-sensor", "42-sensor.json", Ds(&[])),
];

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown fixture {0:?}")]
pub struct UnknownFixture(pub String);

pub fn fixture(name: &str) -> Result<&'static Fixture, UnknownFixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| UnknownFixture(name.to_string()))
}

/// Parses a corpus document by name.
pub fn load_fixture(name: &str) -> Result<SpdxDocument, UnknownFixture> {
    let entry = fixture(name)?;
    let outcome = read_document(entry.bytes.as_bytes()).expect("corpus fixtures parse cleanly");
    Ok(outcome.document)
}
