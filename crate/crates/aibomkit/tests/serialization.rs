//! Reader/writer behavior on documented syntax forms and edge cases.

use aibom_core::{DatasetType, Element, Presence, Severity};
use aibomkit::json::{read_document, write_document, ReadError};

fn read(text: &str) -> aibomkit::json::ReadOutcome {
    read_document(text.as_bytes()).unwrap()
}

fn canonical(text: &str) -> String {
    String::from_utf8(write_document(&read(text).document)).unwrap()
}

#[test]
fn autonomy_type_snippet_maps_to_the_profile_field() {
    let outcome = read(r#"{"type":"ai_AIPackage","ai_autonomyType":"yes"}"#);
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert_eq!(pkg.autonomy_type, Some(Presence::Yes));
}

#[test]
fn dataset_size_reads_as_native_integer() {
    let outcome = read(r#"{"type":"dataset_DatasetPackage","dataset_datasetSize": 2689}"#);
    let Element::Dataset(pkg) = &outcome.document.elements()[0] else {
        panic!("expected DatasetPackage");
    };
    assert_eq!(pkg.dataset_size, Some(2689));
}

#[test]
fn dataset_size_rejects_strings_floats_and_negatives() {
    for (input, want_none) in [
        (
            r#"{"type":"dataset_DatasetPackage","dataset_datasetSize": "2689"}"#,
            true,
        ),
        (
            r#"{"type":"dataset_DatasetPackage","dataset_datasetSize": 26.89}"#,
            true,
        ),
        (
            r#"{"type":"dataset_DatasetPackage","dataset_datasetSize": -1}"#,
            true,
        ),
    ] {
        let outcome = read(input);
        let Element::Dataset(pkg) = &outcome.document.elements()[0] else {
            panic!("expected DatasetPackage");
        };
        assert_eq!(pkg.dataset_size.is_none(), want_none);
        assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "FMT-03"));
    }
}

#[test]
fn hyperparameter_entries_keep_exact_keys_and_values() {
    let outcome = read(
        r#"{"type":"ai_AIPackage","ai_hyperparameter":[
            {"type":"DictionaryEntry","key":"cnn_kernel_vals","value":"[5, 5, 3, 3, 3]"}]}"#,
    );
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert_eq!(pkg.hyperparameter.len(), 1);
    assert_eq!(pkg.hyperparameter[0].key, "cnn_kernel_vals");
    assert_eq!(pkg.hyperparameter[0].value, "[5, 5, 3, 3, 3]");
}

#[test]
fn object_without_type_is_a_hard_error() {
    let err = read_document(br#"{"ai_domain":"x"}"#).unwrap_err();
    assert!(matches!(err, ReadError::MissingType(_)));
    let err =
        read_document(br#"[{"type":"ai_AIPackage","suppliedBy":{"name":"no type"}}]"#).unwrap_err();
    assert!(matches!(err, ReadError::MissingType(_)));
}

#[test]
fn malformed_text_is_a_syntax_error() {
    assert!(matches!(
        read_document(b"{ not json"),
        Err(ReadError::Syntax(_))
    ));
    assert!(matches!(read_document(b"42"), Err(ReadError::Syntax(_))));
}

#[test]
fn unknown_properties_are_preserved_and_reported_as_info() {
    let text = r#"{"type":"ai_AIPackage","spdxId":"https://example.com/p","x_vendor":"acme"}"#;
    let outcome = read(text);
    let infos: Vec<_> = outcome
        .diagnostics
        .iter()
        .filter(|d| d.rule_id == "SER-01")
        .collect();
    assert_eq!(infos.len(), 1);
    assert_eq!(infos[0].severity, Severity::Info);
    assert!(canonical(text).contains(r#""x_vendor": "acme""#));
}

#[test]
fn unknown_element_types_are_preserved_and_reported_as_info() {
    let text =
        r#"{"type":"security_Vulnerability","spdxId":"https://example.com/v","x_score":"9.8"}"#;
    let outcome = read(text);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "SER-02"));
    let Element::Generic(g) = &outcome.document.elements()[0] else {
        panic!("expected generic element");
    };
    assert_eq!(g.type_tag, "security_Vulnerability");
    assert!(canonical(text).contains("security_Vulnerability"));
}

#[test]
fn unknown_relationship_types_survive_as_opaque_nodes() {
    let text = r#"{"type":"Relationship","relationshipType":"hasDocumentation",
        "from":"https://example.com/a","to":["https://example.com/b"]}"#;
    let outcome = read(text);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "EN-10"));
    assert!(outcome.document.relationships().is_empty());
    assert!(matches!(
        &outcome.document.elements()[0],
        Element::Generic(g) if g.type_tag == "Relationship"
    ));
    assert!(canonical(text).contains("hasDocumentation"));
}

#[test]
fn duplicate_ids_keep_the_first_element() {
    let text = r#"[
        {"type":"ai_AIPackage","spdxId":"https://example.com/x","name":"first"},
        {"type":"dataset_DatasetPackage","spdxId":"https://example.com/x","name":"second"}]"#;
    let outcome = read(text);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "DOC-04"));
    assert_eq!(outcome.document.elements().len(), 1);
    assert_eq!(outcome.document.elements()[0].name(), Some("first"));
}

#[test]
fn scalars_are_accepted_for_list_valued_fields() {
    let outcome = read(
        r#"[{"type":"dataset_DatasetPackage","dataset_datasetType":"image",
             "downloadLocation":"https://example.com/d.tar.gz"},
            {"type":"Relationship","relationshipType":"contains",
             "from":"https://example.com/a","to":"https://example.com/b"}]"#,
    );
    let Element::Dataset(pkg) = &outcome.document.elements()[0] else {
        panic!("expected DatasetPackage");
    };
    assert_eq!(pkg.dataset_type, vec![DatasetType::Image]);
    assert_eq!(pkg.core.download_location.len(), 1);
    assert_eq!(outcome.document.relationships()[0].to.len(), 1);
}

#[test]
fn cardinality_upper_bounds_raise_field_rules() {
    let outcome = read(r#"{"type":"ai_AIPackage","ai_autonomyType":["yes","no"]}"#);
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert_eq!(pkg.autonomy_type, None);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "AI-C-01"));
    // singleton arrays are fine
    let outcome = read(r#"{"type":"ai_AIPackage","ai_autonomyType":["yes"]}"#);
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert_eq!(pkg.autonomy_type, Some(Presence::Yes));
}

#[test]
fn bad_tokens_and_formats_become_diagnostics_not_failures() {
    let outcome = read(
        r#"{"type":"ai_AIPackage",
            "buildTime":"2024-04-24T12:00:00+01:00",
            "downloadLocation":"not a uri",
            "primaryPurpose":"Model"}"#,
    );
    let rules: Vec<&str> = outcome.diagnostics.iter().map(|d| d.rule_id).collect();
    assert!(rules.contains(&"FMT-01"));
    assert!(rules.contains(&"FMT-02"));
    assert!(rules.contains(&"EN-01"));
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert!(pkg.core.build_time.is_none());
    assert!(pkg.core.download_location.is_empty());
    assert!(pkg.core.primary_purpose.is_none());
}

#[test]
fn accepts_envelope_bare_array_and_single_node() {
    let node = r#"{"type":"ai_AIPackage","spdxId":"https://example.com/p"}"#;
    for text in [
        format!(
            r#"{{"@context":"https://example.com/ctx","@graph":[{}]}}"#,
            node
        ),
        format!("[{}]", node),
        node.to_string(),
    ] {
        let outcome = read(&text);
        assert_eq!(outcome.document.elements().len(), 1, "{}", text);
    }
}

#[test]
fn context_is_kept_verbatim_or_absent() {
    let with = read(r#"{"@context":"https://example.com/ctx","@graph":[]}"#);
    assert!(with.document.context.is_some());
    let bytes = write_document(&with.document);
    assert!(String::from_utf8(bytes)
        .unwrap()
        .contains("https://example.com/ctx"));

    let without = read("[]");
    assert!(without.document.context.is_none());
    let text = String::from_utf8(write_document(&without.document)).unwrap();
    assert!(!text.contains("@context"));
}

#[test]
fn energy_quantity_lexical_form_survives_string_or_number_input() {
    for text in [
        r#"{"type":"ai_AIPackage","ai_energyConsumption":{"type":"ai_EnergyConsumption",
            "ai_inferenceEnergyConsumption":[{"type":"ai_EnergyConsumptionDescription",
            "ai_energyQuantity":"0.042","ai_energyUnit":"kilowattHour"}]}}"#,
        r#"{"type":"ai_AIPackage","ai_energyConsumption":{"type":"ai_EnergyConsumption",
            "ai_inferenceEnergyConsumption":[{"type":"ai_EnergyConsumptionDescription",
            "ai_energyQuantity":0.042,"ai_energyUnit":"kilowattHour"}]}}"#,
    ] {
        let out = canonical(text);
        assert!(out.contains(r#""ai_energyQuantity": "0.042""#), "{}", out);
        assert!(!out.contains("4.2e-2"));
    }
}

#[test]
fn canonical_key_order_is_type_spdxid_then_alphabetical() {
    let out = canonical(
        r#"{"name":"z","primaryPurpose":"model","spdxId":"https://example.com/p",
            "buildTime":"2024-04-24T12:00:00Z","type":"ai_AIPackage","ai_domain":"d"}"#,
    );
    let type_at = out.find("\"type\"").unwrap();
    let id_at = out.find("\"spdxId\"").unwrap();
    let ai_domain_at = out.find("\"ai_domain\"").unwrap();
    let build_at = out.find("\"buildTime\"").unwrap();
    let name_at = out.find("\"name\"").unwrap();
    let purpose_at = out.find("\"primaryPurpose\"").unwrap();
    assert!(type_at < id_at);
    assert!(id_at < ai_domain_at);
    assert!(ai_domain_at < build_at);
    assert!(build_at < name_at);
    assert!(name_at < purpose_at);
}

#[test]
fn agent_references_by_iri_are_flagged_and_dropped() {
    let outcome =
        read(r#"{"type":"ai_AIPackage","suppliedBy":"https://example.com/agent-elsewhere"}"#);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "SER-04"));
    let Element::Ai(pkg) = &outcome.document.elements()[0] else {
        panic!("expected AIPackage");
    };
    assert!(pkg.core.supplied_by.is_empty());
}

#[test]
fn standalone_agents_become_elements() {
    let outcome = read(
        r#"{"type":"Organization","spdxId":"https://example.com/org",
            "name":"Example AI Co-op","externalIdentifier":["urn:example:1"]}"#,
    );
    let Element::Agent(agent) = &outcome.document.elements()[0] else {
        panic!("expected agent element");
    };
    assert_eq!(agent.name, "Example AI Co-op");
    assert_eq!(agent.external_identifiers, vec!["urn:example:1"]);
}

#[test]
fn relationship_without_from_is_kept_opaque() {
    let outcome = read(r#"{"type":"Relationship","relationshipType":"contains"}"#);
    assert!(outcome.diagnostics.iter().any(|d| d.rule_id == "SER-05"));
    assert!(outcome.document.relationships().is_empty());
    assert_eq!(outcome.document.elements().len(), 1);
}

#[test]
fn empty_to_lists_reach_the_validator() {
    let outcome = read(
        r#"{"type":"Relationship","relationshipType":"contains",
            "from":"https://example.com/a","to":[]}"#,
    );
    assert_eq!(outcome.document.relationships()[0].to.len(), 0);
    let diags = aibom_core::validate_document(
        &outcome.document,
        &[aibom_core::Profile::Ai, aibom_core::Profile::Dataset],
    );
    assert!(diags.iter().any(|d| d.rule_id == "REL-01"));
}
