//! Rendering for coverage reports and diagnostic lists.

use aibom_core::compliance::{CoverageReport, CoverageStatus, Framework};
use aibom_core::validator::rule_by_id;
use aibom_core::Diagnostic;
use serde_json::{Map, Value};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Markdown,
}

/// Renders a coverage report. The framework supplies citations and
/// rationale text for the rows.
pub fn render_report(
    report: &CoverageReport,
    framework: &Framework,
    format: ReportFormat,
) -> String {
    match format {
        ReportFormat::Text => render_text(report, framework),
        ReportFormat::Json => render_json(report),
        ReportFormat::Markdown => render_markdown(report, framework),
    }
}

fn counts(report: &CoverageReport) -> (usize, usize, usize, usize) {
    (
        report.count(CoverageStatus::Satisfied),
        report.count(CoverageStatus::Partial),
        report.count(CoverageStatus::Missing),
        report.count(CoverageStatus::NotMappable),
    )
}

fn render_text(report: &CoverageReport, framework: &Framework) -> String {
    let (satisfied, partial, missing, not_mappable) = counts(report);
    let mut out = String::new();
    let _ = writeln!(out, "framework: {} [{}]", framework.name, framework.id);
    let _ = writeln!(
        out,
        "requirements: {} total, {} mappable",
        report.entries.len(),
        report.mappable_total()
    );
    let _ = writeln!(
        out,
        "satisfied: {}/{} mappable",
        satisfied,
        report.mappable_total()
    );
    let _ = writeln!(
        out,
        "partial: {}, missing: {}, notMappable: {}",
        partial, missing, not_mappable
    );
    let _ = writeln!(out);
    for entry in &report.entries {
        let citation = framework
            .requirements
            .iter()
            .find(|r| r.id == entry.requirement_id)
            .map(|r| r.citation.as_str())
            .unwrap_or("");
        let _ = writeln!(
            out,
            "  {:<42} {:<12} {}",
            entry.requirement_id,
            entry.status.as_str(),
            citation
        );
    }
    out
}

fn render_markdown(report: &CoverageReport, framework: &Framework) -> String {
    let (satisfied, partial, missing, not_mappable) = counts(report);
    let mut out = String::new();
    let _ = writeln!(out, "# Coverage report: {}", framework.name);
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "satisfied: {}/{} mappable (partial: {}, missing: {}, notMappable: {})",
        satisfied,
        report.mappable_total(),
        partial,
        missing,
        not_mappable
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "| requirement | citation | status | notes |");
    let _ = writeln!(out, "|---|---|---|---|");
    for entry in &report.entries {
        let requirement = framework
            .requirements
            .iter()
            .find(|r| r.id == entry.requirement_id);
        let citation = requirement.map(|r| r.citation.as_str()).unwrap_or("");
        // notMappable rows carry their rationale; the rest show where
        // the evidence was found
        let notes = match entry.status {
            CoverageStatus::NotMappable => requirement
                .map(|r| r.description.clone())
                .unwrap_or_default(),
            _ => {
                let mut paths: Vec<&str> = entry.evidence.iter().map(|e| e.path.as_str()).collect();
                paths.dedup();
                paths.join(", ")
            }
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            md_cell(&entry.requirement_id),
            md_cell(citation),
            entry.status,
            md_cell(&notes)
        );
    }
    out
}

fn md_cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

fn render_json(report: &CoverageReport) -> String {
    let (satisfied, partial, missing, not_mappable) = counts(report);
    let mut summary = Map::new();
    summary.insert("satisfied".into(), satisfied.into());
    summary.insert("partial".into(), partial.into());
    summary.insert("missing".into(), missing.into());
    summary.insert("notMappable".into(), not_mappable.into());
    summary.insert("total".into(), report.entries.len().into());

    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|entry| {
            let mut row = Map::new();
            row.insert(
                "requirementId".into(),
                Value::String(entry.requirement_id.clone()),
            );
            row.insert("status".into(), Value::String(entry.status.to_string()));
            row.insert(
                "evidence".into(),
                Value::Array(
                    entry
                        .evidence
                        .iter()
                        .map(|e| {
                            let mut ev = Map::new();
                            ev.insert(
                                "elementId".into(),
                                match &e.element_id {
                                    Some(id) => Value::String(id.as_str().into()),
                                    None => Value::Null,
                                },
                            );
                            ev.insert("path".into(), Value::String(e.path.clone()));
                            Value::Object(ev)
                        })
                        .collect(),
                ),
            );
            Value::Object(row)
        })
        .collect();

    let mut root = Map::new();
    root.insert(
        "frameworkId".into(),
        Value::String(report.framework_id.clone()),
    );
    root.insert("summary".into(), Value::Object(summary));
    root.insert("entries".into(), Value::Array(entries));
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("plain JSON tree");
    text.push('\n');
    text
}

/// Stable JSON export for diagnostics: an array of
/// `{ruleId, severity, elementId, path, message, citation}`.
pub fn diagnostics_to_json(diagnostics: &[Diagnostic]) -> String {
    let rows: Vec<Value> = diagnostics
        .iter()
        .map(|d| {
            let mut row = Map::new();
            row.insert("ruleId".into(), Value::String(d.rule_id.into()));
            row.insert("severity".into(), Value::String(d.severity.to_string()));
            row.insert(
                "elementId".into(),
                match &d.element_id {
                    Some(id) => Value::String(id.as_str().into()),
                    None => Value::Null,
                },
            );
            row.insert("path".into(), Value::String(d.path.clone()));
            row.insert("message".into(), Value::String(d.message.clone()));
            let citation = rule_by_id(d.rule_id).map(|r| r.citation).unwrap_or("");
            row.insert("citation".into(), Value::String(citation.into()));
            Value::Object(row)
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&Value::Array(rows)).expect("plain JSON tree");
    text.push('\n');
    text
}

/// One human-readable line per diagnostic.
pub fn diagnostics_to_text(diagnostics: &[Diagnostic]) -> String {
    let mut out = String::new();
    for d in diagnostics {
        let element = d
            .element_id
            .as_ref()
            .map(|id| id.as_str())
            .unwrap_or("(document)");
        let _ = writeln!(
            out,
            "{:<7} {:<8} {} at {}: {}",
            d.severity, d.rule_id, element, d.path, d.message
        );
    }
    out
}
