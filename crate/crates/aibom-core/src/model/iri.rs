//! IRIs, element identifiers, and license targets.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

/// Prefix of every license on the SPDX license list.
pub const LISTED_LICENSE_PREFIX: &str = "https://spdx.org/licenses/";

/// Sentinel target: the producer makes no assertion about the license.
pub const NO_ASSERTION_LICENSE_IRI: &str =
    "https://spdx.org/rdf/3.0.1/terms/ExpandedLicensing/NoAssertionLicense";

/// Sentinel target: the artifact carries no license.
pub const NONE_LICENSE_IRI: &str = "https://spdx.org/rdf/3.0.1/terms/ExpandedLicensing/NoneLicense";

/// Why a string was rejected as an IRI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IriError {
    Empty,
    /// No `scheme:` prefix before the first `/`, `?`, or `#`.
    MissingScheme,
    /// Whitespace inside the trimmed text.
    EmbeddedWhitespace,
}

impl fmt::Display for IriError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IriError::Empty => f.write_str("IRI is empty"),
            IriError::MissingScheme => f.write_str("IRI has no scheme"),
            IriError::EmbeddedWhitespace => f.write_str("IRI contains whitespace"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for IriError {}

/// An absolute IRI, kept verbatim apart from surrounding-whitespace trim.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    /// Validates and normalizes: trims surrounding whitespace, requires a
    /// scheme, rejects embedded whitespace. No other rewriting.
    pub fn new(text: &str) -> Result<Self, IriError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(IriError::Empty);
        }
        if trimmed.chars().any(char::is_whitespace) {
            return Err(IriError::EmbeddedWhitespace);
        }
        if !has_scheme(trimmed) {
            return Err(IriError::MissingScheme);
        }
        Ok(Iri(trimmed.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Iri {
    type Err = IriError;

    fn from_str(text: &str) -> Result<Self, IriError> {
        Iri::new(text)
    }
}

fn has_scheme(text: &str) -> bool {
    let mut chars = text.char_indices();
    match chars.next() {
        Some((_, c)) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    for (_, c) in chars {
        match c {
            ':' => return true,
            c if c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.') => {}
            _ => return false,
        }
    }
    false
}

/// Uniquely identifies an element so other elements can reference it,
/// internally or across documents.
pub type ElementId = Iri;

/// Classification of the `to` side of a license relationship.
///
/// License expression grammar is out of scope: anything that is neither a
/// listed-license IRI nor one of the two sentinel IRIs is carried as
/// opaque expression text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LicenseTarget {
    /// An entry on the SPDX license list (`https://spdx.org/licenses/...`).
    Listed(Iri),
    /// Explicit "no license" marker.
    None,
    /// Explicit "no assertion" marker.
    NoAssertion,
    /// Anything else, uninterpreted.
    Expression(String),
}

impl LicenseTarget {
    /// Classifies a relationship target.
    pub fn classify(value: &str) -> LicenseTarget {
        if value == NONE_LICENSE_IRI {
            return LicenseTarget::None;
        }
        if value == NO_ASSERTION_LICENSE_IRI {
            return LicenseTarget::NoAssertion;
        }
        if value.starts_with(LISTED_LICENSE_PREFIX) {
            if let Ok(iri) = Iri::new(value) {
                return LicenseTarget::Listed(iri);
            }
        }
        LicenseTarget::Expression(value.to_string())
    }
}
