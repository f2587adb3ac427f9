//! File format, bundled frameworks, fixtures, and CLI for SPDX 3.0 AI
//! bills of materials. The typed model and the rule engines live in
//! `aibom-core`; this crate adds everything that touches bytes: the
//! JSON reader and canonical writer, framework ruleset files, the test
//! corpus, report rendering, and the `aibomkit` binary.

pub mod cli;
pub mod fixtures;
pub mod frameworks;
pub mod json;
pub mod report;
pub mod scaffold;

pub use fixtures::{load_fixture, Fixture, UnknownFixture, FIXTURES};
pub use frameworks::{load_framework, FrameworkError};
pub use json::{read_document, write_document, ReadError, ReadOutcome};
pub use report::{diagnostics_to_json, diagnostics_to_text, render_report, ReportFormat};
pub use scaffold::{scaffold_document, ScaffoldKind};
