//! Command-line front end.
//!
//! Exit codes: 0 success/conformant, 1 non-conformant or coverage
//! failures found (or unknown element id for `inspect`), 2 usage, IO,
//! or parse errors. Results go to stdout; the tool's own errors go to
//! stderr.

use std::path::{Path, PathBuf};

use aibom_core::compliance::{assess, CoverageStatus};
use aibom_core::{validate_document, Diagnostic, Element, Iri, Profile, Severity, SpdxDocument};
use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use crate::frameworks::load_framework;
use crate::json::{read_document, write_document};
use crate::report::{diagnostics_to_json, diagnostics_to_text, render_report, ReportFormat};
use crate::scaffold::{scaffold_document, ScaffoldKind};

#[derive(Debug, Parser)]
#[command(
    name = "aibomkit",
    version,
    about = "Validate, inspect, and report on SPDX 3.0 AI bills of materials"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a document against the AI and Dataset profile rules.
    Validate {
        file: PathBuf,
        /// Profiles to enforce; `auto` follows the document's own
        /// profileConformance declaration (defaulting to both).
        #[arg(long, value_enum, default_value_t = ProfileArg::Auto)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
    },
    /// Assess a document against a regulatory framework.
    Report {
        file: PathBuf,
        /// Framework id (bundled: eu-ai-act, us-fda, eu-mdr, ieee-p70xx).
        #[arg(long)]
        framework: String,
        #[arg(long, value_enum, default_value_t = ReportOutputArg::Text)]
        output: ReportOutputArg,
        /// Coverage level that makes the command exit non-zero.
        #[arg(long = "fail-on", value_enum, default_value_t = FailOn::Missing)]
        fail_on: FailOn,
    },
    /// List a document's elements and relationships, or dump one element.
    Inspect {
        file: PathBuf,
        element_id: Option<String>,
    },
    /// Write a template document with every mandatory field.
    Scaffold {
        #[arg(value_enum)]
        kind: ScaffoldArg,
        out: PathBuf,
    },
    /// Rewrite a document into canonical form.
    Canonicalize {
        file: PathBuf,
        #[arg(long = "in-place")]
        in_place: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Ai,
    Dataset,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportOutputArg {
    Text,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FailOn {
    Never,
    Missing,
    Partial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScaffoldArg {
    Ai,
    Dataset,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run() -> i32 {
    // clap itself exits with 2 on usage errors
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("aibomkit: {:#}", e);
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Validate {
            file,
            profile,
            output,
        } => cmd_validate(&file, profile, output),
        Command::Report {
            file,
            framework,
            output,
            fail_on,
        } => cmd_report(&file, &framework, output, fail_on),
        Command::Inspect { file, element_id } => cmd_inspect(&file, element_id.as_deref()),
        Command::Scaffold { kind, out } => cmd_scaffold(kind, &out),
        Command::Canonicalize { file, in_place } => cmd_canonicalize(&file, in_place),
    }
}

fn load(file: &Path) -> Result<(SpdxDocument, Vec<Diagnostic>)> {
    let bytes = std::fs::read(file).with_context(|| format!("cannot read {}", file.display()))?;
    let outcome =
        read_document(&bytes).with_context(|| format!("cannot parse {}", file.display()))?;
    Ok((outcome.document, outcome.diagnostics))
}

fn cmd_validate(file: &Path, profile: ProfileArg, output: OutputArg) -> Result<i32> {
    let (doc, mut diagnostics) = load(file)?;
    let profiles: Vec<Profile> = match profile {
        ProfileArg::Ai => vec![Profile::Ai],
        ProfileArg::Dataset => vec![Profile::Dataset],
        ProfileArg::Auto => {
            let mut declared = Vec::new();
            if doc.profile_conformance.iter().any(|p| p == "ai") {
                declared.push(Profile::Ai);
            }
            if doc.profile_conformance.iter().any(|p| p == "dataset") {
                declared.push(Profile::Dataset);
            }
            if declared.is_empty() {
                declared = vec![Profile::Ai, Profile::Dataset];
            }
            declared
        }
    };
    diagnostics.extend(validate_document(&doc, &profiles));

    let errors = diagnostics
        .iter()
        .filter(|d| d.severity == Severity::Error)
        .count();
    match output {
        OutputArg::Json => print!("{}", diagnostics_to_json(&diagnostics)),
        OutputArg::Text => {
            print!("{}", diagnostics_to_text(&diagnostics));
            if errors == 0 {
                if diagnostics.is_empty() {
                    println!("conformant");
                } else {
                    println!("conformant with notes ({} finding(s))", diagnostics.len());
                }
            } else {
                println!("non-conformant: {} error(s)", errors);
            }
        }
    }
    Ok(if errors == 0 { 0 } else { 1 })
}

fn cmd_report(
    file: &Path,
    framework_id: &str,
    output: ReportOutputArg,
    fail_on: FailOn,
) -> Result<i32> {
    let framework = load_framework(framework_id)?;
    let (doc, _) = load(file)?;
    let report = assess(&doc, &framework);
    let format = match output {
        ReportOutputArg::Text => ReportFormat::Text,
        ReportOutputArg::Json => ReportFormat::Json,
        ReportOutputArg::Markdown => ReportFormat::Markdown,
    };
    print!("{}", render_report(&report, &framework, format));

    let missing = report.count(CoverageStatus::Missing);
    let partial = report.count(CoverageStatus::Partial);
    let breached = match fail_on {
        FailOn::Never => false,
        FailOn::Missing => missing > 0,
        FailOn::Partial => missing > 0 || partial > 0,
    };
    Ok(if breached { 1 } else { 0 })
}

fn cmd_inspect(file: &Path, element_id: Option<&str>) -> Result<i32> {
    let (doc, _) = load(file)?;
    match element_id {
        None => {
            println!("elements:");
            for element in doc.elements() {
                println!(
                    "  {:<24} {:<32} {}",
                    element.kind_name(),
                    element.name().unwrap_or("-"),
                    element
                        .spdx_id()
                        .map(|id| id.as_str())
                        .unwrap_or("(no spdxId)")
                );
            }
            println!("relationships:");
            for rel in doc.relationships() {
                println!(
                    "  {:<24} {} -> {}",
                    rel.relationship_type,
                    rel.from,
                    rel.to
                        .iter()
                        .map(|i| i.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
            Ok(0)
        }
        Some(wanted) => {
            let found = Iri::new(wanted)
                .ok()
                .and_then(|iri| doc.element(&iri).cloned());
            match found {
                Some(element) => {
                    print!("{}", render_element(&element));
                    Ok(0)
                }
                None => {
                    eprintln!("aibomkit: no element with spdxId {:?}", wanted);
                    Ok(1)
                }
            }
        }
    }
}

// an element alone in a document serializes to exactly its node
fn render_element(element: &Element) -> String {
    let mut doc = SpdxDocument::new();
    doc.add_element(element.clone()).expect("fresh document");
    let bytes = write_document(&doc);
    let value: serde_json::Value = serde_json::from_slice(&bytes).expect("own output parses");
    let node = &value["@graph"][0];
    let mut text = serde_json::to_string_pretty(node).expect("plain JSON tree");
    text.push('\n');
    text
}

fn cmd_scaffold(kind: ScaffoldArg, out: &Path) -> Result<i32> {
    let doc = scaffold_document(match kind {
        ScaffoldArg::Ai => ScaffoldKind::Ai,
        ScaffoldArg::Dataset => ScaffoldKind::Dataset,
    });
    std::fs::write(out, write_document(&doc))
        .with_context(|| format!("cannot write {}", out.display()))?;
    eprintln!("aibomkit: wrote template to {}", out.display());
    Ok(0)
}

fn cmd_canonicalize(file: &Path, in_place: bool) -> Result<i32> {
    let (doc, _) = load(file)?;
    let bytes = write_document(&doc);
    if in_place {
        std::fs::write(file, bytes).with_context(|| format!("cannot write {}", file.display()))?;
    } else {
        use std::io::Write;
        std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| anyhow!("cannot write to stdout: {}", e))?;
    }
    Ok(0)
}
