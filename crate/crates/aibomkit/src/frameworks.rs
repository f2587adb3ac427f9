//! Bundled regulatory framework rulesets and their file format.
//!
//! Each framework ships as a JSON data file so requirement sets can be
//! revised without code changes. `AIBOMKIT_FRAMEWORK_DIR` points the
//! loader at a directory of replacement rulesets; bundled ones are the
//! fallback.

use aibom_core::compliance::{Framework, Requirement};
use serde_json::{Map, Value};
use thiserror::Error;

/// Environment variable overriding the bundled ruleset directory.
pub const FRAMEWORK_DIR_ENV: &str = "AIBOMKIT_FRAMEWORK_DIR";

const EU_AI_ACT: &str = include_str!("../data/frameworks/eu-ai-act.json");
const US_FDA: &str = include_str!("../data/frameworks/us-fda.json");
const EU_MDR: &str = include_str!("../data/frameworks/eu-mdr.json");
const IEEE_P70XX: &str = include_str!("../data/frameworks/ieee-p70xx.json");

/// Bundled framework ids.
pub const BUNDLED_IDS: &[&str] = &["eu-ai-act", "us-fda", "eu-mdr", "ieee-p70xx"];

#[derive(Debug, Error)]
pub enum FrameworkError {
    #[error("unknown framework {0:?} (bundled: eu-ai-act, us-fda, eu-mdr, ieee-p70xx)")]
    Unknown(String),
    #[error("cannot read framework file: {0}")]
    Io(#[from] std::io::Error),
    #[error("framework ruleset is malformed: {0}")]
    Malformed(String),
}

/// Loads a framework by id, preferring `$AIBOMKIT_FRAMEWORK_DIR/<id>.json`
/// over the bundled ruleset.
pub fn load_framework(id: &str) -> Result<Framework, FrameworkError> {
    if let Ok(dir) = std::env::var(FRAMEWORK_DIR_ENV) {
        let path = std::path::Path::new(&dir).join(format!("{}.json", id));
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            return parse_framework(&text);
        }
    }
    let bundled = match id {
        "eu-ai-act" => EU_AI_ACT,
        "us-fda" => US_FDA,
        "eu-mdr" => EU_MDR,
        "ieee-p70xx" => IEEE_P70XX,
        _ => return Err(FrameworkError::Unknown(id.to_string())),
    };
    parse_framework(bundled)
}

/// Parses a ruleset file: `{id, name, requirements: [{id, citation,
/// description, mappedPaths, mappable}]}`.
pub fn parse_framework(text: &str) -> Result<Framework, FrameworkError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| FrameworkError::Malformed(e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(FrameworkError::Malformed(
            "top level must be an object".into(),
        ));
    };
    let id = req_string(&map, "id")?;
    let name = req_string(&map, "name")?;
    let Some(Value::Array(rows)) = map.get("requirements") else {
        return Err(FrameworkError::Malformed(
            "requirements must be an array".into(),
        ));
    };
    let mut requirements = Vec::new();
    for row in rows {
        let Value::Object(row) = row else {
            return Err(FrameworkError::Malformed(
                "requirement must be an object".into(),
            ));
        };
        let requirement = Requirement {
            id: req_string(row, "id")?,
            citation: req_string(row, "citation")?,
            description: req_string(row, "description")?,
            mapped_paths: match row.get("mappedPaths") {
                Some(Value::Array(paths)) => paths
                    .iter()
                    .map(|p| {
                        p.as_str().map(str::to_string).ok_or_else(|| {
                            FrameworkError::Malformed("mappedPaths entries must be strings".into())
                        })
                    })
                    .collect::<Result<_, _>>()?,
                None => Vec::new(),
                Some(_) => {
                    return Err(FrameworkError::Malformed(
                        "mappedPaths must be an array".into(),
                    ))
                }
            },
            mappable: match row.get("mappable") {
                Some(Value::Bool(b)) => *b,
                _ => {
                    return Err(FrameworkError::Malformed(
                        "mappable must be a boolean".into(),
                    ))
                }
            },
        };
        if !requirement.is_well_formed() {
            return Err(FrameworkError::Malformed(format!(
                "requirement {} is not mappable but lists mapped paths",
                requirement.id
            )));
        }
        requirements.push(requirement);
    }
    for (i, a) in requirements.iter().enumerate() {
        if requirements[i + 1..].iter().any(|b| b.id == a.id) {
            return Err(FrameworkError::Malformed(format!(
                "duplicate requirement id {}",
                a.id
            )));
        }
    }
    Ok(Framework {
        id,
        name,
        requirements,
    })
}

/// Inverse of [`parse_framework`]; used for ruleset round-trip checks.
pub fn serialize_framework(framework: &Framework) -> String {
    let mut root = Map::new();
    root.insert("id".into(), Value::String(framework.id.clone()));
    root.insert("name".into(), Value::String(framework.name.clone()));
    root.insert(
        "requirements".into(),
        Value::Array(
            framework
                .requirements
                .iter()
                .map(|req| {
                    let mut row = Map::new();
                    row.insert("id".into(), Value::String(req.id.clone()));
                    row.insert("citation".into(), Value::String(req.citation.clone()));
                    row.insert("description".into(), Value::String(req.description.clone()));
                    row.insert(
                        "mappedPaths".into(),
                        Value::Array(
                            req.mapped_paths
                                .iter()
                                .map(|p| Value::String(p.clone()))
                                .collect(),
                        ),
                    );
                    row.insert("mappable".into(), Value::Bool(req.mappable));
                    Value::Object(row)
                })
                .collect(),
        ),
    );
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("plain JSON tree");
    text.push('\n');
    text
}

fn req_string(map: &Map<String, Value>, key: &str) -> Result<String, FrameworkError> {
    map.get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| FrameworkError::Malformed(format!("{} must be a string", key)))
}
