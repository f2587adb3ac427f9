//! Document reader.
//!
//! Only two conditions abort a read: text that is not JSON, and an
//! interpreted object without a `"type"` discriminator. Everything else
//! (unknown types or properties, bad tokens, wrong shapes) degrades to a
//! diagnostic: unknown material is preserved opaquely, invalid values are
//! dropped and reported.

use aibom_core::{
    Agent, AgentKind, AiPackage, CreationInfo, DatasetPackage, DatasetType, Diagnostic,
    DictionaryEntry, Element, ElementId, EnergyConsumption, EnergyConsumptionDescription,
    EnergyQuantity, FileArtifact, GenericElement, Iri, PackageCore, Relationship, RelationshipType,
    SpdxDocument, Timestamp,
};
use serde_json::{Map, Value};
use thiserror::Error;

use super::value_to_opaque;

/// A parsed document plus everything the reader had to flag.
#[derive(Debug)]
pub struct ReadOutcome {
    pub document: SpdxDocument,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("document is not valid JSON: {0}")]
    Syntax(String),
    #[error("object at {0} has no \"type\" discriminator")]
    MissingType(String),
}

/// Reads one document from UTF-8 JSON text.
pub fn read_document(bytes: &[u8]) -> Result<ReadOutcome, ReadError> {
    let value: Value =
        serde_json::from_slice(bytes).map_err(|e| ReadError::Syntax(e.to_string()))?;
    let mut reader = Reader {
        doc: SpdxDocument::new(),
        diagnostics: Vec::new(),
        saw_document_node: false,
    };

    let nodes: Vec<Value> = match value {
        Value::Array(items) => items,
        Value::Object(mut map) => {
            if let Some(graph) = map.remove("@graph") {
                if let Some(context) = map.remove("@context") {
                    reader.doc.context = Some(value_to_opaque(&context));
                }
                for (key, v) in &map {
                    reader.unknown_property(None, key, v);
                }
                match graph {
                    Value::Array(items) => items,
                    other => vec![other],
                }
            } else {
                vec![Value::Object(map)]
            }
        }
        _ => {
            return Err(ReadError::Syntax(
                "top level must be an object or an array of nodes".into(),
            ))
        }
    };

    for (index, node) in nodes.into_iter().enumerate() {
        reader.read_node(node, index)?;
    }

    Ok(ReadOutcome {
        document: reader.doc,
        diagnostics: reader.diagnostics,
    })
}

struct Reader {
    doc: SpdxDocument,
    diagnostics: Vec<Diagnostic>,
    saw_document_node: bool,
}

impl Reader {
    fn diag(&mut self, rule: &'static str, id: Option<ElementId>, path: &str, message: String) {
        self.diagnostics
            .push(Diagnostic::for_rule(rule, id, path).with_message(message));
    }

    fn unknown_property(&mut self, id: Option<ElementId>, key: &str, value: &Value) {
        self.diag(
            "SER-01",
            id,
            key,
            format!("unknown property {:?} preserved as-is", key),
        );
        let _ = value;
    }

    fn read_node(&mut self, node: Value, index: usize) -> Result<(), ReadError> {
        let at = format!("@graph[{}]", index);
        let Value::Object(map) = node else {
            return Err(ReadError::Syntax(format!("{} is not an object", at)));
        };
        let type_tag = match map.get("type").and_then(Value::as_str) {
            Some(t) => t.to_string(),
            None => return Err(ReadError::MissingType(at)),
        };

        match type_tag.as_str() {
            "ai_AIPackage" => {
                let element = Element::Ai(self.read_ai_package(map)?);
                self.add_element(element);
            }
            "dataset_DatasetPackage" => {
                let element = Element::Dataset(self.read_dataset_package(map)?);
                self.add_element(element);
            }
            "File" => {
                let element = Element::File(self.read_file(map)?);
                self.add_element(element);
            }
            "Person" | "Organization" | "Tool" => {
                let agent = self.read_agent_object(map, &at)?;
                self.add_element(Element::Agent(agent));
            }
            "Relationship" => self.read_relationship(map)?,
            "SpdxDocument" => self.read_document_node(map, &at)?,
            other => {
                self.diag(
                    "SER-02",
                    None,
                    &at,
                    format!("unknown element type {:?} preserved as-is", other),
                );
                let element = Element::Generic(self.read_generic(map));
                self.add_element(element);
            }
        }
        Ok(())
    }

    fn add_element(&mut self, element: Element) {
        if let Err(err) = self.doc.add_element(element) {
            self.diag("DOC-04", None, "spdxId", err.to_string());
        }
    }

    // --- field extraction -------------------------------------------------

    /// Collapses singleton arrays for 0..1 / 1..1 fields. More than one
    /// value raises the field's cardinality rule and drops the value.
    fn scalar(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        key: &str,
        rule_many: &'static str,
    ) -> Option<Value> {
        match value {
            Value::Array(mut items) => {
                if items.len() > 1 {
                    self.diag(
                        rule_many,
                        id.clone(),
                        key,
                        format!("{} admits at most one value, found {}", key, items.len()),
                    );
                    None
                } else {
                    items.pop()
                }
            }
            other => Some(other),
        }
    }

    fn text(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        key: &str,
        rule_many: &'static str,
    ) -> Option<String> {
        match self.scalar(value, id, key, rule_many)? {
            Value::String(s) => Some(s),
            other => {
                self.shape(id, key, &other);
                None
            }
        }
    }

    fn shape(&mut self, id: &Option<ElementId>, key: &str, got: &Value) {
        self.diag(
            "SER-03",
            id.clone(),
            key,
            format!("{} has unexpected JSON shape ({})", key, kind_of(got)),
        );
    }

    fn timestamp(&mut self, value: Value, id: &Option<ElementId>, key: &str) -> Option<Timestamp> {
        let text = self.text(value, id, key, "SER-03")?;
        match text.parse() {
            Ok(ts) => Some(ts),
            Err(e) => {
                self.diag(
                    "FMT-01",
                    id.clone(),
                    key,
                    format!("{} {:?}: {}", key, text, e),
                );
                None
            }
        }
    }

    fn iri(&mut self, value: Value, id: &Option<ElementId>, key: &str) -> Option<Iri> {
        let text = self.text(value, id, key, "SER-03")?;
        self.iri_from_text(&text, id, key)
    }

    fn iri_from_text(&mut self, text: &str, id: &Option<ElementId>, key: &str) -> Option<Iri> {
        match Iri::new(text) {
            Ok(iri) => Some(iri),
            Err(e) => {
                self.diag(
                    "FMT-02",
                    id.clone(),
                    key,
                    format!("{} {:?}: {}", key, text, e),
                );
                None
            }
        }
    }

    /// Accepts a scalar or an array for 0..* / 1..* fields.
    fn list(&mut self, value: Value) -> Vec<Value> {
        match value {
            Value::Array(items) => items,
            other => vec![other],
        }
    }

    fn text_list(&mut self, value: Value, id: &Option<ElementId>, key: &str) -> Vec<String> {
        self.list(value)
            .into_iter()
            .filter_map(|item| match item {
                Value::String(s) => Some(s),
                other => {
                    self.shape(id, key, &other);
                    None
                }
            })
            .collect()
    }

    fn iri_list(&mut self, value: Value, id: &Option<ElementId>, key: &str) -> Vec<Iri> {
        self.text_list(value, id, key)
            .into_iter()
            .filter_map(|text| self.iri_from_text(&text, id, key))
            .collect()
    }

    fn token<T>(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        key: &str,
        rule_many: &'static str,
        rule_token: &'static str,
    ) -> Option<T>
    where
        T: core::str::FromStr<Err = aibom_core::UnknownToken>,
    {
        let text = self.text(value, id, key, rule_many)?;
        match text.parse() {
            Ok(v) => Some(v),
            Err(e) => {
                self.diag(rule_token, id.clone(), key, e.to_string());
                None
            }
        }
    }

    fn agent_list(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        key: &str,
    ) -> Result<Vec<Agent>, ReadError> {
        let mut agents = Vec::new();
        for (i, item) in self.list(value).into_iter().enumerate() {
            let at = format!("{}[{}]", key, i);
            match item {
                Value::Object(map) => {
                    let tag = match map.get("type").and_then(Value::as_str) {
                        Some(t) => t.to_string(),
                        None => return Err(ReadError::MissingType(at)),
                    };
                    if tag.parse::<AgentKind>().is_ok() {
                        agents.push(self.read_agent_object(map, &at)?);
                    } else {
                        self.diag(
                            "SER-04",
                            id.clone(),
                            &at,
                            format!("{} entry has non-agent type {:?}; entry dropped", key, tag),
                        );
                    }
                }
                other => {
                    self.diag(
                        "SER-04",
                        id.clone(),
                        &at,
                        format!(
                            "{} entry is {} but only inline agent objects are supported; entry dropped",
                            key,
                            kind_of(&other)
                        ),
                    );
                }
            }
        }
        Ok(agents)
    }

    fn dictionary_list(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        key: &str,
    ) -> Result<Vec<DictionaryEntry>, ReadError> {
        let mut entries = Vec::new();
        for (i, item) in self.list(value).into_iter().enumerate() {
            let at = format!("{}[{}]", key, i);
            let Value::Object(mut map) = item else {
                self.shape(id, &at, &item);
                continue;
            };
            let tag = match map.get("type").and_then(Value::as_str) {
                Some(t) => t.to_string(),
                None => return Err(ReadError::MissingType(at)),
            };
            if tag != "DictionaryEntry" {
                self.shape(id, &at, &Value::Object(map));
                continue;
            }
            let entry_key = map.remove("key").and_then(as_string);
            let entry_value = map.remove("value").and_then(as_string);
            match (entry_key, entry_value) {
                (Some(k), Some(v)) if !k.is_empty() => {
                    entries.push(DictionaryEntry { key: k, value: v });
                }
                _ => self.diag(
                    "SER-03",
                    id.clone(),
                    &at,
                    "DictionaryEntry needs a non-empty key and a value; entry dropped".into(),
                ),
            }
        }
        Ok(entries)
    }

    // --- node parsers -----------------------------------------------------

    fn read_core(&mut self, map: &mut Map<String, Value>) -> Result<PackageCore, ReadError> {
        let mut core = PackageCore {
            spdx_id: map
                .remove("spdxId")
                .and_then(|v| self.iri(v, &None, "spdxId")),
            ..Default::default()
        };
        let id = core.spdx_id.clone();
        if let Some(v) = map.remove("name") {
            core.name = self.text(v, &id, "name", "SER-03").unwrap_or_default();
        }
        if let Some(v) = map.remove("packageVersion") {
            core.package_version = self
                .text(v, &id, "packageVersion", "SER-03")
                .unwrap_or_default();
        }
        if let Some(v) = map.remove("buildTime") {
            core.build_time = self.timestamp(v, &id, "buildTime");
        }
        if let Some(v) = map.remove("releaseTime") {
            core.release_time = self.timestamp(v, &id, "releaseTime");
        }
        if let Some(v) = map.remove("validUntilTime") {
            core.valid_until_time = self.timestamp(v, &id, "validUntilTime");
        }
        if let Some(v) = map.remove("downloadLocation") {
            core.download_location = self.iri_list(v, &id, "downloadLocation");
        }
        if let Some(v) = map.remove("primaryPurpose") {
            core.primary_purpose = self.token(v, &id, "primaryPurpose", "SER-03", "EN-01");
        }
        if let Some(v) = map.remove("suppliedBy") {
            core.supplied_by = self.agent_list(v, &id, "suppliedBy")?;
        }
        if let Some(v) = map.remove("originatedBy") {
            core.originated_by = self.agent_list(v, &id, "originatedBy")?;
        }
        if let Some(v) = map.remove("supportLevel") {
            core.support_level = self.text(v, &id, "supportLevel", "SER-03");
        }
        if let Some(v) = map.remove("standardName") {
            core.standard_name = self.text(v, &id, "standardName", "SER-03");
        }
        if let Some(v) = map.remove("comment") {
            core.comment = self.text(v, &id, "comment", "SER-03");
        }
        if let Some(v) = map.remove("description") {
            core.description = self.text(v, &id, "description", "SER-03");
        }
        Ok(core)
    }

    fn read_ai_package(&mut self, mut map: Map<String, Value>) -> Result<AiPackage, ReadError> {
        map.remove("type");
        let core = self.read_core(&mut map)?;
        let id = core.spdx_id.clone();
        let mut pkg = AiPackage {
            core,
            ..Default::default()
        };
        if let Some(v) = map.remove("ai_autonomyType") {
            pkg.autonomy_type = self.token(v, &id, "ai_autonomyType", "AI-C-01", "EN-02");
        }
        if let Some(v) = map.remove("ai_domain") {
            pkg.domain = self.text(v, &id, "ai_domain", "AI-C-02");
        }
        if let Some(v) = map.remove("ai_energyConsumption") {
            pkg.energy_consumption = self.read_energy(v, &id)?;
        }
        if let Some(v) = map.remove("ai_hyperparameter") {
            pkg.hyperparameter = self.dictionary_list(v, &id, "ai_hyperparameter")?;
        }
        if let Some(v) = map.remove("ai_informationAboutTraining") {
            pkg.information_about_training =
                self.text(v, &id, "ai_informationAboutTraining", "AI-C-04");
        }
        if let Some(v) = map.remove("ai_informationAboutApplication") {
            pkg.information_about_application =
                self.text(v, &id, "ai_informationAboutApplication", "AI-C-05");
        }
        if let Some(v) = map.remove("ai_limitation") {
            pkg.limitation = self.text(v, &id, "ai_limitation", "AI-C-06");
        }
        if let Some(v) = map.remove("ai_metric") {
            pkg.metric = self.dictionary_list(v, &id, "ai_metric")?;
        }
        if let Some(v) = map.remove("ai_metricDecisionThreshold") {
            pkg.metric_decision_threshold =
                self.dictionary_list(v, &id, "ai_metricDecisionThreshold")?;
        }
        if let Some(v) = map.remove("ai_modelDataPreprocessing") {
            pkg.model_data_preprocessing = self.text_list(v, &id, "ai_modelDataPreprocessing");
        }
        if let Some(v) = map.remove("ai_modelExplainability") {
            pkg.model_explainability = self.text_list(v, &id, "ai_modelExplainability");
        }
        if let Some(v) = map.remove("ai_safetyRiskAssessment") {
            pkg.safety_risk_assessment =
                self.token(v, &id, "ai_safetyRiskAssessment", "AI-C-07", "EN-04");
        }
        if let Some(v) = map.remove("ai_standardCompliance") {
            pkg.standard_compliance = self.text_list(v, &id, "ai_standardCompliance");
        }
        if let Some(v) = map.remove("ai_typeOfModel") {
            pkg.type_of_model = self.text_list(v, &id, "ai_typeOfModel");
        }
        if let Some(v) = map.remove("ai_useSensitivePersonalInformation") {
            pkg.use_sensitive_personal_information = self.token(
                v,
                &id,
                "ai_useSensitivePersonalInformation",
                "AI-C-08",
                "EN-03",
            );
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            pkg.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(pkg)
    }

    fn read_dataset_package(
        &mut self,
        mut map: Map<String, Value>,
    ) -> Result<DatasetPackage, ReadError> {
        map.remove("type");
        let core = self.read_core(&mut map)?;
        let id = core.spdx_id.clone();
        let mut pkg = DatasetPackage {
            core,
            ..Default::default()
        };
        if let Some(v) = map.remove("dataset_datasetType") {
            pkg.dataset_type = self
                .text_list(v, &id, "dataset_datasetType")
                .into_iter()
                .filter_map(|t| match t.parse::<DatasetType>() {
                    Ok(dt) => Some(dt),
                    Err(e) => {
                        self.diag("EN-06", id.clone(), "dataset_datasetType", e.to_string());
                        None
                    }
                })
                .collect();
        }
        if let Some(v) = map.remove("dataset_anonymizationMethodUsed") {
            pkg.anonymization_method_used =
                self.text(v, &id, "dataset_anonymizationMethodUsed", "DS-C-01");
        }
        if let Some(v) = map.remove("dataset_confidentialityLevel") {
            pkg.confidentiality_level =
                self.token(v, &id, "dataset_confidentialityLevel", "DS-C-02", "EN-07");
        }
        if let Some(v) = map.remove("dataset_dataCollectionProcess") {
            pkg.data_collection_process =
                self.text(v, &id, "dataset_dataCollectionProcess", "DS-C-03");
        }
        if let Some(v) = map.remove("dataset_dataPreprocessing") {
            pkg.data_preprocessing = self.text(v, &id, "dataset_dataPreprocessing", "DS-C-04");
        }
        if let Some(v) = map.remove("dataset_datasetAvailability") {
            pkg.dataset_availability =
                self.token(v, &id, "dataset_datasetAvailability", "DS-C-05", "EN-08");
        }
        if let Some(v) = map.remove("dataset_datasetNoise") {
            pkg.dataset_noise = self.text(v, &id, "dataset_datasetNoise", "DS-C-06");
        }
        if let Some(v) = map.remove("dataset_datasetSize") {
            pkg.dataset_size = self.dataset_size(v, &id);
        }
        if let Some(v) = map.remove("dataset_datasetUpdateMechanism") {
            pkg.dataset_update_mechanism =
                self.text(v, &id, "dataset_datasetUpdateMechanism", "DS-C-08");
        }
        if let Some(v) = map.remove("dataset_hasSensitivePersonalInformation") {
            pkg.has_sensitive_personal_information = self.token(
                v,
                &id,
                "dataset_hasSensitivePersonalInformation",
                "DS-C-09",
                "EN-09",
            );
        }
        if let Some(v) = map.remove("dataset_intendedUse") {
            pkg.intended_use = self.text(v, &id, "dataset_intendedUse", "DS-C-10");
        }
        if let Some(v) = map.remove("dataset_knownBias") {
            pkg.known_bias = self.text(v, &id, "dataset_knownBias", "DS-C-11");
        }
        if let Some(v) = map.remove("dataset_sensor") {
            pkg.sensor = self.dictionary_list(v, &id, "dataset_sensor")?;
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            pkg.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(pkg)
    }

    /// Dataset sizes are native JSON integers, never strings.
    fn dataset_size(&mut self, value: Value, id: &Option<ElementId>) -> Option<u64> {
        let scalar = self.scalar(value, id, "dataset_datasetSize", "DS-C-07")?;
        let size = match &scalar {
            Value::Number(n) => n.as_u64(),
            _ => None,
        };
        if size.is_none() {
            self.diag(
                "FMT-03",
                id.clone(),
                "dataset_datasetSize",
                format!(
                    "dataset_datasetSize must be a non-negative integer, got {}",
                    scalar
                ),
            );
        }
        size
    }

    fn read_energy(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
    ) -> Result<Option<EnergyConsumption>, ReadError> {
        let Some(scalar) = self.scalar(value, id, "ai_energyConsumption", "AI-C-03") else {
            return Ok(None);
        };
        let Value::Object(mut map) = scalar else {
            self.shape(id, "ai_energyConsumption", &scalar);
            return Ok(None);
        };
        let tag = match map.get("type").and_then(Value::as_str) {
            Some(t) => t.to_string(),
            None => return Err(ReadError::MissingType("ai_energyConsumption".into())),
        };
        if tag != "ai_EnergyConsumption" {
            self.shape(id, "ai_energyConsumption", &Value::Object(map));
            return Ok(None);
        }
        map.remove("type");
        let mut energy = EnergyConsumption::default();
        for (key, slot) in [
            ("ai_trainingEnergyConsumption", 0usize),
            ("ai_finetuningEnergyConsumption", 1),
            ("ai_inferenceEnergyConsumption", 2),
        ] {
            let Some(v) = map.remove(key) else { continue };
            let mut descriptions = Vec::new();
            for (i, item) in self.list(v).into_iter().enumerate() {
                let at = format!("ai_energyConsumption.{}[{}]", key, i);
                if let Some(d) = self.read_energy_description(item, id, &at)? {
                    descriptions.push(d);
                }
            }
            match slot {
                0 => energy.training = descriptions,
                1 => energy.finetuning = descriptions,
                _ => energy.inference = descriptions,
            }
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            energy.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(Some(energy))
    }

    fn read_energy_description(
        &mut self,
        value: Value,
        id: &Option<ElementId>,
        at: &str,
    ) -> Result<Option<EnergyConsumptionDescription>, ReadError> {
        let Value::Object(mut map) = value else {
            self.shape(id, at, &value);
            return Ok(None);
        };
        let tag = match map.get("type").and_then(Value::as_str) {
            Some(t) => t.to_string(),
            None => return Err(ReadError::MissingType(at.into())),
        };
        if tag != "ai_EnergyConsumptionDescription" {
            self.shape(id, at, &Value::Object(map));
            return Ok(None);
        }
        map.remove("type");
        let mut desc = EnergyConsumptionDescription::default();
        if let Some(v) = map.remove("ai_energyQuantity") {
            // quantities arrive as strings or bare numbers; either way the
            // source lexical form is what gets stored
            let text = match self.scalar(v, id, "ai_energyQuantity", "SER-03") {
                Some(Value::String(s)) => Some(s),
                Some(Value::Number(n)) => Some(n.to_string()),
                Some(other) => {
                    self.shape(id, "ai_energyQuantity", &other);
                    None
                }
                None => None,
            };
            if let Some(text) = text {
                match EnergyQuantity::new(&text) {
                    Ok(q) => desc.energy_quantity = Some(q),
                    Err(_) => self.diag(
                        "FMT-04",
                        id.clone(),
                        &format!("{}.ai_energyQuantity", at),
                        format!("ai_energyQuantity {:?} is not a non-negative decimal", text),
                    ),
                }
            }
        }
        if let Some(v) = map.remove("ai_energyUnit") {
            desc.energy_unit = self.token(v, id, "ai_energyUnit", "SER-03", "EN-05");
        }
        if let Some(v) = map.remove("comment") {
            desc.comment = self.text(v, id, "comment", "SER-03");
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            desc.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(Some(desc))
    }

    fn read_file(&mut self, mut map: Map<String, Value>) -> Result<FileArtifact, ReadError> {
        map.remove("type");
        let mut file = FileArtifact {
            spdx_id: map
                .remove("spdxId")
                .and_then(|v| self.iri(v, &None, "spdxId")),
            ..Default::default()
        };
        let id = file.spdx_id.clone();
        if let Some(v) = map.remove("name") {
            file.name = self.text(v, &id, "name", "SER-03").unwrap_or_default();
        }
        if let Some(v) = map.remove("contentType") {
            file.content_type = self.text(v, &id, "contentType", "SER-03");
        }
        if let Some(v) = map.remove("primaryPurpose") {
            file.primary_purpose = self.token(v, &id, "primaryPurpose", "SER-03", "EN-01");
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            file.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(file)
    }

    fn read_agent_object(
        &mut self,
        mut map: Map<String, Value>,
        at: &str,
    ) -> Result<Agent, ReadError> {
        let tag = map
            .remove("type")
            .and_then(as_string)
            .ok_or_else(|| ReadError::MissingType(at.into()))?;
        let mut agent = Agent {
            kind: tag.parse().unwrap_or(AgentKind::Organization),
            ..Default::default()
        };
        agent.spdx_id = map
            .remove("spdxId")
            .and_then(|v| self.iri(v, &None, "spdxId"));
        let id = agent.spdx_id.clone();
        if let Some(v) = map.remove("name") {
            agent.name = self.text(v, &id, "name", "SER-03").unwrap_or_default();
        }
        if let Some(v) = map.remove("externalIdentifier") {
            agent.external_identifiers = self.text_list(v, &id, "externalIdentifier");
        }
        for (key, value) in &map {
            self.unknown_property(id.clone(), key, value);
            agent.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(agent)
    }

    /// Relationship nodes that cannot carry their semantics (no usable
    /// from/relationshipType) survive as opaque generic elements.
    fn read_relationship(&mut self, mut map: Map<String, Value>) -> Result<(), ReadError> {
        let type_token = map
            .get("relationshipType")
            .and_then(Value::as_str)
            .map(str::to_string);
        let from_text = map.get("from").and_then(Value::as_str).map(str::to_string);

        let relationship_type = match &type_token {
            Some(token) => match token.parse::<RelationshipType>() {
                Ok(t) => Some(t),
                Err(e) => {
                    self.diag("EN-10", None, "relationshipType", e.to_string());
                    None
                }
            },
            None => {
                self.diag(
                    "SER-05",
                    None,
                    "relationshipType",
                    "relationship node has no relationshipType; node kept opaque".into(),
                );
                None
            }
        };
        let from = match &from_text {
            Some(text) => self.iri_from_text(text, &None, "from"),
            None => {
                self.diag(
                    "SER-05",
                    None,
                    "from",
                    "relationship node has no from; node kept opaque".into(),
                );
                None
            }
        };

        let (Some(relationship_type), Some(from)) = (relationship_type, from) else {
            let element = Element::Generic(self.read_generic(map));
            self.add_element(element);
            return Ok(());
        };

        map.remove("type");
        map.remove("relationshipType");
        map.remove("from");
        let mut rel = Relationship::new(relationship_type, from, Vec::new());
        rel.spdx_id = map
            .remove("spdxId")
            .and_then(|v| self.iri(v, &None, "spdxId"));
        if let Some(v) = map.remove("to") {
            rel.to = self.iri_list(v, &rel.spdx_id.clone(), "to");
        }
        if let Some(v) = map.remove("description") {
            rel.description = self.text(v, &rel.spdx_id.clone(), "description", "SER-03");
        }
        for (key, value) in &map {
            self.unknown_property(rel.spdx_id.clone(), key, value);
            rel.unknown.insert(key.clone(), value_to_opaque(value));
        }
        self.doc.add_relationship(rel);
        Ok(())
    }

    fn read_generic(&mut self, mut map: Map<String, Value>) -> GenericElement {
        let type_tag = map.remove("type").and_then(as_string).unwrap_or_default();
        let spdx_id = match map.get("spdxId").and_then(Value::as_str) {
            Some(text) => match Iri::new(text) {
                Ok(iri) => {
                    map.remove("spdxId");
                    Some(iri)
                }
                // invalid ids stay in the property bag untouched
                Err(_) => None,
            },
            None => None,
        };
        let properties = map
            .iter()
            .map(|(k, v)| (k.clone(), value_to_opaque(v)))
            .collect();
        GenericElement {
            type_tag,
            spdx_id,
            properties,
        }
    }

    fn read_document_node(
        &mut self,
        mut map: Map<String, Value>,
        at: &str,
    ) -> Result<(), ReadError> {
        if self.saw_document_node {
            self.diag(
                "DOC-05",
                None,
                at,
                "multiple SpdxDocument nodes; extra node kept opaque".into(),
            );
            let element = Element::Generic(self.read_generic(map));
            self.add_element(element);
            return Ok(());
        }
        self.saw_document_node = true;
        map.remove("type");
        self.doc.spdx_id = map
            .remove("spdxId")
            .and_then(|v| self.iri(v, &None, "spdxId"));
        if let Some(v) = map.remove("creationInfo") {
            self.doc.creation_info = self.read_creation_info(v)?;
        }
        if let Some(v) = map.remove("profileConformance") {
            self.doc.profile_conformance = self.text_list(v, &None, "profileConformance");
        }
        if let Some(v) = map.remove("rootElement") {
            self.doc.root_elements = self.iri_list(v, &None, "rootElement");
        }
        for (key, value) in &map {
            self.unknown_property(None, key, value);
            self.doc.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(())
    }

    fn read_creation_info(&mut self, value: Value) -> Result<Option<CreationInfo>, ReadError> {
        let Some(scalar) = self.scalar(value, &None, "creationInfo", "SER-03") else {
            return Ok(None);
        };
        let Value::Object(mut map) = scalar else {
            self.shape(&None, "creationInfo", &scalar);
            return Ok(None);
        };
        let tag = match map.get("type").and_then(Value::as_str) {
            Some(t) => t.to_string(),
            None => return Err(ReadError::MissingType("creationInfo".into())),
        };
        if tag != "CreationInfo" {
            self.shape(&None, "creationInfo", &Value::Object(map));
            return Ok(None);
        }
        map.remove("type");
        let mut info = CreationInfo::default();
        if let Some(v) = map.remove("created") {
            info.created = self.timestamp(v, &None, "created");
        }
        if let Some(v) = map.remove("createdBy") {
            info.created_by = self.agent_list(v, &None, "createdBy")?;
        }
        for (key, value) in &map {
            self.unknown_property(None, key, value);
            info.unknown.insert(key.clone(), value_to_opaque(value));
        }
        Ok(Some(info))
    }
}

fn as_string(value: Value) -> Option<String> {
    match value {
        Value::String(s) => Some(s),
        _ => None,
    }
}

fn kind_of(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}
