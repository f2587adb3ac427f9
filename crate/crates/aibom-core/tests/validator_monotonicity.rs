//! Adding an optional field with a valid value to a conformant document
//! never introduces an error-severity diagnostic.

use aibom_core::{
    validate_document, Agent, AiPackage, ConfidentialityLevel, DatasetAvailability, DatasetPackage,
    DatasetType, DictionaryEntry, Element, EnergyConsumption, EnergyConsumptionDescription,
    EnergyQuantity, EnergyUnit, Iri, PackageCore, Presence, Profile, Relationship,
    RelationshipType, SafetyRisk, Severity, SoftwarePurpose, SpdxDocument,
};

const BOTH: &[Profile] = &[Profile::Ai, Profile::Dataset];

type FieldSetter<T> = Box<dyn Fn(&mut T)>;

fn id(text: &str) -> Iri {
    Iri::new(text).unwrap()
}

fn full_core(spdx_id: &str, name: &str, purpose: SoftwarePurpose) -> PackageCore {
    PackageCore {
        spdx_id: Some(id(spdx_id)),
        name: name.into(),
        package_version: "1.0".into(),
        build_time: Some("2024-04-24T12:00:00Z".parse().unwrap()),
        release_time: Some("2024-04-24T12:00:00Z".parse().unwrap()),
        download_location: vec![id("https://example.com/pkg.tar.gz")],
        primary_purpose: Some(purpose),
        supplied_by: vec![Agent::organization("Example AI Co-op")],
        originated_by: vec![Agent::organization("Example AI Co-op")],
        ..Default::default()
    }
}

fn build_doc(ai: AiPackage, ds: DatasetPackage, extra: Vec<Relationship>) -> SpdxDocument {
    let mut doc = SpdxDocument::new();
    doc.creation_info = Some(aibom_core::CreationInfo {
        created: Some("2024-04-24T12:00:00Z".parse().unwrap()),
        created_by: vec![Agent::person("Example Creator")],
        ..Default::default()
    });
    doc.root_elements = vec![ai.core.spdx_id.clone().unwrap()];
    let ai_id = ai.core.spdx_id.clone().unwrap();
    let ds_id = ds.core.spdx_id.clone().unwrap();
    doc.add_element(Element::Ai(ai)).unwrap();
    doc.add_element(Element::Dataset(ds)).unwrap();
    for pkg in [&ai_id, &ds_id] {
        for kind in [
            RelationshipType::HasConcludedLicense,
            RelationshipType::HasDeclaredLicense,
        ] {
            doc.add_relationship(Relationship::new(
                kind,
                pkg.clone(),
                vec![id("https://spdx.org/licenses/Apache-2.0")],
            ));
        }
    }
    for rel in extra {
        doc.add_relationship(rel);
    }
    doc
}

fn base_ai() -> AiPackage {
    AiPackage {
        core: full_core(
            "https://example.com/ai",
            "word-model",
            SoftwarePurpose::Model,
        ),
        ..Default::default()
    }
}

fn base_ds() -> DatasetPackage {
    DatasetPackage {
        core: full_core(
            "https://example.com/ds",
            "IAMdataset",
            SoftwarePurpose::Data,
        ),
        dataset_type: vec![DatasetType::Image],
        ..Default::default()
    }
}

fn assert_no_errors(label: &str, doc: &SpdxDocument) {
    let errors: Vec<_> = validate_document(doc, BOTH)
        .into_iter()
        .filter(|d| d.severity == Severity::Error)
        .collect();
    assert!(errors.is_empty(), "{}: {:?}", label, errors);
}

fn valid_energy() -> EnergyConsumption {
    EnergyConsumption {
        training: vec![EnergyConsumptionDescription {
            energy_quantity: Some(EnergyQuantity::new("980").unwrap()),
            energy_unit: Some(EnergyUnit::KilowattHour),
            ..Default::default()
        }],
        ..Default::default()
    }
}

#[test]
fn base_document_is_conformant() {
    assert_eq!(
        validate_document(&build_doc(base_ai(), base_ds(), vec![]), BOTH),
        vec![]
    );
}

#[test]
fn optional_ai_fields_never_break_conformance() {
    let setters: Vec<(&str, FieldSetter<AiPackage>)> = vec![
        (
            "autonomyType",
            Box::new(|p| p.autonomy_type = Some(Presence::Yes)),
        ),
        (
            "domain",
            Box::new(|p| p.domain = Some("computer vision".into())),
        ),
        (
            "energyConsumption",
            Box::new(|p| p.energy_consumption = Some(valid_energy())),
        ),
        (
            "hyperparameter",
            Box::new(|p| p.hyperparameter = vec![DictionaryEntry::new("learning_rate", "0.001")]),
        ),
        (
            "informationAboutTraining",
            Box::new(|p| p.information_about_training = Some("supervised".into())),
        ),
        (
            "informationAboutApplication",
            Box::new(|p| p.information_about_application = Some("vehicle identification".into())),
        ),
        (
            "limitation",
            Box::new(|p| p.limitation = Some("clear weather only".into())),
        ),
        (
            "metric",
            Box::new(|p| p.metric = vec![DictionaryEntry::new("precision", "0.94")]),
        ),
        (
            "metricDecisionThreshold",
            Box::new(|p| {
                p.metric_decision_threshold = vec![DictionaryEntry::new("precision", "0.20")]
            }),
        ),
        (
            "modelDataPreprocessing",
            Box::new(|p| p.model_data_preprocessing = vec!["lower casing".into()]),
        ),
        (
            "modelExplainability",
            Box::new(|p| p.model_explainability = vec!["feature_importance".into()]),
        ),
        (
            "safetyRiskAssessment",
            Box::new(|p| p.safety_risk_assessment = Some(SafetyRisk::Low)),
        ),
        (
            "standardCompliance",
            Box::new(|p| p.standard_compliance = vec!["ISO/IEC 42001".into()]),
        ),
        (
            "typeOfModel",
            Box::new(|p| p.type_of_model = vec!["neural network".into()]),
        ),
        (
            "useSensitivePersonalInformation",
            Box::new(|p| p.use_sensitive_personal_information = Some(Presence::No)),
        ),
        (
            "validUntilTime",
            Box::new(|p| p.core.valid_until_time = Some("2026-04-24T12:00:00Z".parse().unwrap())),
        ),
        (
            "supportLevel",
            Box::new(|p| p.core.support_level = Some("maintained".into())),
        ),
        (
            "standardName",
            Box::new(|p| p.core.standard_name = Some("ISO/IEC 5962".into())),
        ),
        (
            "comment",
            Box::new(|p| p.core.comment = Some("note".into())),
        ),
        (
            "description",
            Box::new(|p| p.core.description = Some("a model".into())),
        ),
    ];
    for (label, set) in setters {
        let mut ai = base_ai();
        set(&mut ai);
        assert_no_errors(label, &build_doc(ai, base_ds(), vec![]));
    }
}

#[test]
fn optional_dataset_fields_never_break_conformance() {
    let setters: Vec<(&str, FieldSetter<DatasetPackage>)> = vec![
        (
            "anonymizationMethodUsed",
            Box::new(|p| p.anonymization_method_used = Some("pseudonymization".into())),
        ),
        (
            "confidentialityLevel",
            Box::new(|p| p.confidentiality_level = Some(ConfidentialityLevel::Clear)),
        ),
        (
            "dataCollectionProcess",
            Box::new(|p| p.data_collection_process = Some("scraped".into())),
        ),
        (
            "dataPreprocessing",
            Box::new(|p| p.data_preprocessing = Some("z-score standardization".into())),
        ),
        (
            "datasetAvailability",
            Box::new(|p| p.dataset_availability = Some(DatasetAvailability::DirectDownload)),
        ),
        (
            "datasetNoise",
            Box::new(|p| p.dataset_noise = Some("typos".into())),
        ),
        ("datasetSize", Box::new(|p| p.dataset_size = Some(2689))),
        (
            "datasetUpdateMechanism",
            Box::new(|p| p.dataset_update_mechanism = Some("Batch. Updated annually.".into())),
        ),
        (
            "hasSensitivePersonalInformation",
            Box::new(|p| p.has_sensitive_personal_information = Some(Presence::No)),
        ),
        (
            "intendedUse",
            Box::new(|p| p.intended_use = Some("research".into())),
        ),
        (
            "knownBias",
            Box::new(|p| p.known_bias = Some("regional coverage".into())),
        ),
        (
            "sensor",
            Box::new(|p| p.sensor = vec![DictionaryEntry::new("lidar", "Acme A-5.2M")]),
        ),
    ];
    for (label, set) in setters {
        let mut ds = base_ds();
        set(&mut ds);
        assert_no_errors(label, &build_doc(base_ai(), ds, vec![]));
    }
}

#[test]
fn optional_training_relationships_never_break_conformance() {
    let trained = Relationship::new(
        RelationshipType::TrainedOn,
        id("https://example.com/ai"),
        vec![id("https://example.com/ds")],
    );
    let tested = Relationship::new(
        RelationshipType::TestedOn,
        id("https://example.com/ai"),
        vec![id("https://example.com/ds")],
    );
    assert_no_errors(
        "trainedOn+testedOn",
        &build_doc(base_ai(), base_ds(), vec![trained.clone(), tested]),
    );
    // a second trainedOn is flagged, but only as a warning
    let doc = build_doc(base_ai(), base_ds(), vec![trained.clone(), trained]);
    let diags = validate_document(&doc, BOTH);
    assert!(diags.iter().any(|d| d.rule_id == "AI-C-09"));
    assert!(diags.iter().all(|d| d.severity != Severity::Error));
}
