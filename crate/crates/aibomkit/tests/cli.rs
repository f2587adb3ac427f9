//! CLI output content, beyond the exit-code contract.

use std::process::Command;

use aibomkit::fixtures::fixture;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aibomkit"))
}

fn write_fixture(dir: &tempfile::TempDir, name: &str) -> std::path::PathBuf {
    let path = dir.path().join(format!("{name}.spdx.json"));
    std::fs::write(&path, fixture(name).unwrap().bytes).unwrap();
    path
}

#[test]
fn validate_json_output_is_the_diagnostics_array() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "eu-ai-act-full");
    let output = bin()
        .args(["validate", path.to_str().unwrap(), "--output", "json"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let value: Value = serde_json::from_slice(&output.stdout).unwrap();
    let rows = value.as_array().unwrap();
    // the full fixture carries pass-through properties and an opaque
    // relationship node, all reported as notes
    assert!(!rows.is_empty());
    for row in rows {
        for key in [
            "ruleId",
            "severity",
            "elementId",
            "path",
            "message",
            "citation",
        ] {
            assert!(row.get(key).is_some(), "missing {key}: {row}");
        }
        assert_ne!(row["severity"], "error");
    }
}

#[test]
fn validate_profile_flag_downgrades_other_class() {
    let dir = tempfile::tempdir().unwrap();
    // a dataset package missing originatedBy, checked as ai-only:
    // the finding must appear as a warning, not an error
    let text = r#"[{"type":"dataset_DatasetPackage","spdxId":"https://example.com/ds"}]"#;
    let path = dir.path().join("ds.spdx.json");
    std::fs::write(&path, text).unwrap();

    let strict = bin()
        .args(["validate", path.to_str().unwrap(), "--profile", "dataset"])
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(1));

    let lenient = bin()
        .args(["validate", path.to_str().unwrap(), "--profile", "ai"])
        .output()
        .unwrap();
    assert_eq!(lenient.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&lenient.stdout);
    assert!(stdout.contains("warning"));
    assert!(stdout.contains("conformant with notes"));
}

#[test]
fn report_json_matches_the_documented_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "co2");
    let output = bin()
        .args([
            "report",
            path.to_str().unwrap(),
            "--framework",
            "us-fda",
            "--output",
            "json",
            "--fail-on",
            "never",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let value: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["frameworkId"], "us-fda");
    assert_eq!(value["entries"].as_array().unwrap().len(), 9);
    // the CO2 dataset documents its collection process
    let data_collection = value["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["requirementId"] == "data-collection")
        .unwrap();
    assert_eq!(data_collection["status"], "satisfied");
    assert_eq!(
        data_collection["evidence"][0]["path"],
        "dataCollectionProcess"
    );
}

#[test]
fn report_markdown_has_a_table_and_rationale() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "co2");
    let output = bin()
        .args([
            "report",
            path.to_str().unwrap(),
            "--framework",
            "eu-ai-act",
            "--output",
            "markdown",
            "--fail-on",
            "never",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("| requirement | citation | status | notes |"));
    assert!(text.contains("notMappable"));
    assert!(text.contains("There is no specific relationship type for this"));
}

#[test]
fn report_fail_on_partial_is_stricter_than_missing() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "co2");
    // co2 satisfies some FDA rows fully and misses others; with partials
    // absent both thresholds behave the same, so use eu-ai-act where the
    // intended-purpose row is partial (primaryPurpose without
    // informationAboutApplication)
    let missing_only = bin()
        .args(["report", path.to_str().unwrap(), "--framework", "eu-ai-act"])
        .output()
        .unwrap();
    assert_eq!(missing_only.status.code(), Some(1));
    let json = bin()
        .args([
            "report",
            path.to_str().unwrap(),
            "--framework",
            "eu-ai-act",
            "--output",
            "json",
            "--fail-on",
            "partial",
        ])
        .output()
        .unwrap();
    assert_eq!(json.status.code(), Some(1));
    let value: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert!(value["summary"]["partial"].as_u64().unwrap() >= 1);
}

#[test]
fn inspect_element_dump_shows_all_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "co2");
    let output = bin()
        .args([
            "inspect",
            path.to_str().unwrap(),
            "https://spdx.org/spdxdocs/DatasetPackage/EX-co2-and-greenhouse-gas-emissions",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let value: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["type"], "dataset_DatasetPackage");
    assert_eq!(
        value["dataset_knownBias"],
        "Data in some geographical areas are more complete than the others."
    );
    assert_eq!(value["dataset_datasetSize"], 2689);
}

#[test]
fn inspect_lists_the_simplehtr_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "simplehtr");
    let output = bin()
        .args(["inspect", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("word-model"));
    assert!(text.contains("IAMdataset"));
    assert!(text.contains("trainedOn"));
    assert!(text.contains("hasDeclaredLicense"));
}

#[test]
fn framework_dir_env_var_overrides_bundled_rulesets() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_fixture(&dir, "co2");
    std::fs::write(
        dir.path().join("eu-ai-act.json"),
        r#"{"id":"eu-ai-act","name":"Replacement","requirements":[
            {"id":"only","citation":"c","description":"d","mappedPaths":["name"],"mappable":true}
        ]}"#,
    )
    .unwrap();
    let output = bin()
        .env("AIBOMKIT_FRAMEWORK_DIR", dir.path())
        .args([
            "report",
            doc.to_str().unwrap(),
            "--framework",
            "eu-ai-act",
            "--fail-on",
            "never",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("Replacement"));
    assert!(text.contains("satisfied: 1/1 mappable"));
}

#[test]
fn canonicalize_in_place_rewrites_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("messy.spdx.json");
    std::fs::write(
        &path,
        r#"{"name":"m","type":"ai_AIPackage","spdxId":"https://example.com/p"}"#,
    )
    .unwrap();
    let output = bin()
        .args(["canonicalize", "--in-place", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\n  \"@graph\": ["));
    assert!(text.ends_with("\n"));
    let type_at = text.find("\"type\"").unwrap();
    let id_at = text.find("\"spdxId\"").unwrap();
    let name_at = text.find("\"name\"").unwrap();
    assert!(type_at < id_at && id_at < name_at);
}
