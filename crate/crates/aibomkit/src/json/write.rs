//! Canonical document writer.
//!
//! One byte form per document: the envelope object holds `@context`
//! (when the document has one) and `@graph`; the graph lists the
//! document node first, then elements in insertion order, then
//! relationships in insertion order. Within every object, `type` comes
//! first, `spdxId` second, remaining keys byte-sorted. Arrays keep model
//! order. Output is UTF-8 with LF line endings, 2-space indentation, and
//! a trailing newline.

use aibom_core::{
    Agent, AiPackage, CreationInfo, DatasetPackage, DictionaryEntry, Element, EnergyConsumption,
    EnergyConsumptionDescription, FileArtifact, GenericElement, Iri, PropertyBag, Relationship,
    SpdxDocument, Timestamp,
};
use serde_json::{Map, Value};

use super::{opaque_to_value, sort_canonical};

/// Serializes a frozen document to its canonical bytes.
pub fn write_document(doc: &SpdxDocument) -> Vec<u8> {
    let mut graph: Vec<Value> = Vec::new();
    if let Some(node) = document_node(doc) {
        graph.push(node);
    }
    for element in doc.elements() {
        graph.push(element_node(element));
    }
    for relationship in doc.relationships() {
        graph.push(relationship_node(relationship));
    }

    let mut envelope = Node::new();
    if let Some(context) = &doc.context {
        envelope.push("@context", opaque_to_value(context));
    }
    envelope.push("@graph", Value::Array(graph));

    let mut text = serde_json::to_string_pretty(&envelope.finish())
        .expect("canonical values always serialize");
    text.push('\n');
    text.into_bytes()
}

/// Collects keys, then emits them in canonical order.
struct Node {
    pairs: Vec<(String, Value)>,
}

impl Node {
    fn new() -> Self {
        Node { pairs: Vec::new() }
    }

    fn typed(tag: &str) -> Self {
        let mut node = Node::new();
        node.push("type", Value::String(tag.into()));
        node
    }

    fn push(&mut self, key: &str, value: Value) {
        self.pairs.push((key.into(), value));
    }

    fn text(&mut self, key: &str, value: &str) {
        if !value.is_empty() {
            self.push(key, Value::String(value.into()));
        }
    }

    fn opt_text(&mut self, key: &str, value: &Option<String>) {
        if let Some(v) = value {
            self.push(key, Value::String(v.clone()));
        }
    }

    fn timestamp(&mut self, key: &str, value: &Option<Timestamp>) {
        if let Some(ts) = value {
            self.push(key, Value::String(ts.render()));
        }
    }

    fn token(&mut self, key: &str, value: Option<&str>) {
        if let Some(t) = value {
            self.push(key, Value::String(t.into()));
        }
    }

    fn iri(&mut self, key: &str, value: &Option<Iri>) {
        if let Some(iri) = value {
            self.push(key, Value::String(iri.as_str().into()));
        }
    }

    fn iri_array(&mut self, key: &str, values: &[Iri]) {
        if !values.is_empty() {
            self.push(
                key,
                Value::Array(
                    values
                        .iter()
                        .map(|i| Value::String(i.as_str().into()))
                        .collect(),
                ),
            );
        }
    }

    fn text_array(&mut self, key: &str, values: &[String]) {
        if !values.is_empty() {
            self.push(
                key,
                Value::Array(values.iter().map(|s| Value::String(s.clone())).collect()),
            );
        }
    }

    fn array(&mut self, key: &str, values: Vec<Value>) {
        if !values.is_empty() {
            self.push(key, Value::Array(values));
        }
    }

    fn bag(&mut self, bag: &PropertyBag) {
        for (key, value) in bag {
            self.push(key, opaque_to_value(value));
        }
    }

    fn finish(mut self) -> Value {
        sort_canonical(&mut self.pairs);
        let mut map = Map::new();
        for (key, value) in self.pairs {
            map.insert(key, value);
        }
        Value::Object(map)
    }
}

fn document_node(doc: &SpdxDocument) -> Option<Value> {
    let wanted = doc.spdx_id.is_some()
        || doc.creation_info.is_some()
        || !doc.profile_conformance.is_empty()
        || !doc.root_elements.is_empty()
        || !doc.unknown.is_empty();
    if !wanted {
        return None;
    }
    let mut node = Node::typed("SpdxDocument");
    node.iri("spdxId", &doc.spdx_id);
    if let Some(info) = &doc.creation_info {
        node.push("creationInfo", creation_info_node(info));
    }
    node.text_array("profileConformance", &doc.profile_conformance);
    node.iri_array("rootElement", &doc.root_elements);
    node.bag(&doc.unknown);
    Some(node.finish())
}

fn creation_info_node(info: &CreationInfo) -> Value {
    let mut node = Node::typed("CreationInfo");
    node.timestamp("created", &info.created);
    node.array(
        "createdBy",
        info.created_by.iter().map(agent_node).collect(),
    );
    node.bag(&info.unknown);
    node.finish()
}

fn agent_node(agent: &Agent) -> Value {
    let mut node = Node::typed(agent.kind.as_str());
    node.iri("spdxId", &agent.spdx_id);
    node.text("name", &agent.name);
    node.text_array("externalIdentifier", &agent.external_identifiers);
    node.bag(&agent.unknown);
    node.finish()
}

fn dictionary_node(entry: &DictionaryEntry) -> Value {
    let mut node = Node::typed("DictionaryEntry");
    node.push("key", Value::String(entry.key.clone()));
    node.push("value", Value::String(entry.value.clone()));
    node.finish()
}

fn element_node(element: &Element) -> Value {
    match element {
        Element::Ai(pkg) => ai_node(pkg),
        Element::Dataset(pkg) => dataset_node(pkg),
        Element::File(file) => file_node(file),
        Element::Agent(agent) => agent_node(agent),
        Element::Generic(generic) => generic_node(generic),
    }
}

fn core_fields(node: &mut Node, core: &aibom_core::PackageCore) {
    node.iri("spdxId", &core.spdx_id);
    node.text("name", &core.name);
    node.text("packageVersion", &core.package_version);
    node.timestamp("buildTime", &core.build_time);
    node.timestamp("releaseTime", &core.release_time);
    node.timestamp("validUntilTime", &core.valid_until_time);
    node.iri_array("downloadLocation", &core.download_location);
    node.token("primaryPurpose", core.primary_purpose.map(|p| p.as_str()));
    node.array(
        "suppliedBy",
        core.supplied_by.iter().map(agent_node).collect(),
    );
    node.array(
        "originatedBy",
        core.originated_by.iter().map(agent_node).collect(),
    );
    node.opt_text("supportLevel", &core.support_level);
    node.opt_text("standardName", &core.standard_name);
    node.opt_text("comment", &core.comment);
    node.opt_text("description", &core.description);
}

fn ai_node(pkg: &AiPackage) -> Value {
    let mut node = Node::typed("ai_AIPackage");
    core_fields(&mut node, &pkg.core);
    node.token("ai_autonomyType", pkg.autonomy_type.map(|p| p.as_str()));
    node.opt_text("ai_domain", &pkg.domain);
    if let Some(energy) = &pkg.energy_consumption {
        node.push("ai_energyConsumption", energy_node(energy));
    }
    node.array(
        "ai_hyperparameter",
        pkg.hyperparameter.iter().map(dictionary_node).collect(),
    );
    node.opt_text(
        "ai_informationAboutTraining",
        &pkg.information_about_training,
    );
    node.opt_text(
        "ai_informationAboutApplication",
        &pkg.information_about_application,
    );
    node.opt_text("ai_limitation", &pkg.limitation);
    node.array(
        "ai_metric",
        pkg.metric.iter().map(dictionary_node).collect(),
    );
    node.array(
        "ai_metricDecisionThreshold",
        pkg.metric_decision_threshold
            .iter()
            .map(dictionary_node)
            .collect(),
    );
    node.text_array("ai_modelDataPreprocessing", &pkg.model_data_preprocessing);
    node.text_array("ai_modelExplainability", &pkg.model_explainability);
    node.token(
        "ai_safetyRiskAssessment",
        pkg.safety_risk_assessment.map(|r| r.as_str()),
    );
    node.text_array("ai_standardCompliance", &pkg.standard_compliance);
    node.text_array("ai_typeOfModel", &pkg.type_of_model);
    node.token(
        "ai_useSensitivePersonalInformation",
        pkg.use_sensitive_personal_information.map(|p| p.as_str()),
    );
    node.bag(&pkg.unknown);
    node.finish()
}

fn dataset_node(pkg: &DatasetPackage) -> Value {
    let mut node = Node::typed("dataset_DatasetPackage");
    core_fields(&mut node, &pkg.core);
    if !pkg.dataset_type.is_empty() {
        node.push(
            "dataset_datasetType",
            Value::Array(
                pkg.dataset_type
                    .iter()
                    .map(|t| Value::String(t.as_str().into()))
                    .collect(),
            ),
        );
    }
    node.opt_text(
        "dataset_anonymizationMethodUsed",
        &pkg.anonymization_method_used,
    );
    node.token(
        "dataset_confidentialityLevel",
        pkg.confidentiality_level.map(|c| c.as_str()),
    );
    node.opt_text(
        "dataset_dataCollectionProcess",
        &pkg.data_collection_process,
    );
    node.opt_text("dataset_dataPreprocessing", &pkg.data_preprocessing);
    node.token(
        "dataset_datasetAvailability",
        pkg.dataset_availability.map(|a| a.as_str()),
    );
    node.opt_text("dataset_datasetNoise", &pkg.dataset_noise);
    if let Some(size) = pkg.dataset_size {
        node.push("dataset_datasetSize", Value::Number(size.into()));
    }
    node.opt_text(
        "dataset_datasetUpdateMechanism",
        &pkg.dataset_update_mechanism,
    );
    node.token(
        "dataset_hasSensitivePersonalInformation",
        pkg.has_sensitive_personal_information.map(|p| p.as_str()),
    );
    node.opt_text("dataset_intendedUse", &pkg.intended_use);
    node.opt_text("dataset_knownBias", &pkg.known_bias);
    node.array(
        "dataset_sensor",
        pkg.sensor.iter().map(dictionary_node).collect(),
    );
    node.bag(&pkg.unknown);
    node.finish()
}

fn energy_node(energy: &EnergyConsumption) -> Value {
    let mut node = Node::typed("ai_EnergyConsumption");
    for (key, descriptions) in [
        ("ai_trainingEnergyConsumption", &energy.training),
        ("ai_finetuningEnergyConsumption", &energy.finetuning),
        ("ai_inferenceEnergyConsumption", &energy.inference),
    ] {
        node.array(
            key,
            descriptions.iter().map(energy_description_node).collect(),
        );
    }
    node.bag(&energy.unknown);
    node.finish()
}

fn energy_description_node(desc: &EnergyConsumptionDescription) -> Value {
    let mut node = Node::typed("ai_EnergyConsumptionDescription");
    if let Some(q) = &desc.energy_quantity {
        // always a string, preserving the source spelling
        node.push("ai_energyQuantity", Value::String(q.as_str().into()));
    }
    node.token("ai_energyUnit", desc.energy_unit.map(|u| u.as_str()));
    node.opt_text("comment", &desc.comment);
    node.bag(&desc.unknown);
    node.finish()
}

fn file_node(file: &FileArtifact) -> Value {
    let mut node = Node::typed("File");
    node.iri("spdxId", &file.spdx_id);
    node.text("name", &file.name);
    node.opt_text("contentType", &file.content_type);
    node.token("primaryPurpose", file.primary_purpose.map(|p| p.as_str()));
    node.bag(&file.unknown);
    node.finish()
}

fn generic_node(generic: &GenericElement) -> Value {
    let mut node = Node::typed(&generic.type_tag);
    node.iri("spdxId", &generic.spdx_id);
    node.bag(&generic.properties);
    node.finish()
}

fn relationship_node(rel: &Relationship) -> Value {
    let mut node = Node::typed("Relationship");
    node.iri("spdxId", &rel.spdx_id);
    node.push(
        "relationshipType",
        Value::String(rel.relationship_type.as_str().into()),
    );
    node.push("from", Value::String(rel.from.as_str().into()));
    node.push(
        "to",
        Value::Array(
            rel.to
                .iter()
                .map(|i| Value::String(i.as_str().into()))
                .collect(),
        ),
    );
    node.opt_text("description", &rel.description);
    node.bag(&rel.unknown);
    node.finish()
}
