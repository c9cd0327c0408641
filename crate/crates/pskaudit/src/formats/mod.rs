//! File formats: capture lines, OUI vendor tables, handshake field files.
//!
//! Everything here is line-oriented text. Parsers are strict about field
//! shapes but tolerant of case and CRLF endings, never panic on garbage
//! input, and tag every error with a 1-based line number so batch runs can
//! report exactly which records were dropped.

mod capture;
mod handshake;
mod oui;

pub use capture::{parse_capture_lines, parse_pmkid_line, serialize_pmkid_line, CaptureParse};
pub use handshake::{load_handshake_file, parse_handshake_record, serialize_handshake_record};
pub use oui::{vendor_report, OuiTable, UNKNOWN_VENDOR};

use crate::crypto::{
    compute_pmkid, derive_pmk, CryptoError, Essid, MacAddress, Pmkid,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: expected 4 or 9 `*`-separated fields, got {got}")]
    FieldCount { line: usize, got: usize },
    #[error("line {line}: {field} is not valid hex")]
    HexDecode { line: usize, field: &'static str },
    #[error("line {line}: {field} must be {expected} hex chars, got {got}")]
    FieldLength {
        line: usize,
        field: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("line {line}: unsupported capture record type `{tag}` (only PMKID records, type 01)")]
    UnsupportedRecordType { line: usize, tag: String },
    #[error("line {line}: malformed OUI entry (expected XX-XX-XX<TAB>name)")]
    MalformedOuiLine { line: usize },
    #[error("line {line}: {0}", .source)]
    Field {
        line: usize,
        #[source]
        source: CryptoError,
    },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: expected `key = value`")]
    MalformedRecordLine { line: usize },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("duplicate key `{key}` at line {line}")]
    DuplicateKey { line: usize, key: &'static str },
}

/// One crackable PMKID record: the hash plus the public parameters needed
/// to recompute it for each candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashTarget {
    pub pmkid: Pmkid,
    pub mac_ap: MacAddress,
    pub mac_sta: MacAddress,
    pub essid: Essid,
    /// 1-based line in the source file; 0 for synthesized targets.
    pub source_line: usize,
}

impl HashTarget {
    /// Build a self-consistent target from a known passphrase — the
    /// planted-secret path used by tests, examples and demos.
    pub fn synthesize(
        passphrase: &str,
        essid: &Essid,
        mac_ap: MacAddress,
        mac_sta: MacAddress,
    ) -> Result<Self, CryptoError> {
        let pmk = derive_pmk(passphrase, essid)?;
        Ok(HashTarget {
            pmkid: compute_pmkid(&pmk, mac_ap, mac_sta),
            mac_ap,
            mac_sta,
            essid: essid.clone(),
            source_line: 0,
        })
    }

    /// Modern-format capture line for this target.
    pub fn to_line(&self) -> String {
        serialize_pmkid_line(self)
    }
}
