//! Audit toolkit for WPA2-PSK passphrase strength.
//!
//! The library covers the full audit loop for networks you are
//! authorized to assess:
//!
//! - [`crypto`] — PMK/PMKID/MIC derivation and candidate verification;
//! - [`formats`] — capture-line and handshake-record parsing, OUI
//!   vendor attribution;
//! - [`keyspace`] — enumerable candidate spaces (phone numbers, digit
//!   strings, dates, national ID patterns, vendor defaults, wordlists);
//! - [`engine`] — deterministic parallel search joining keyspaces to
//!   targets, plus throughput benchmarking;
//! - [`strength`] — entropy estimates and keyboard-trace scoring for
//!   individual passphrases;
//! - [`classify`] — pattern classification, distribution reporting,
//!   and masking for recovered passphrases;
//! - [`cli`] — the `pskaudit` command-line front end.
//!
//! Recovered passphrases are masked by default everywhere they are
//! printed; see the CLI documentation for the explicit double opt-in
//! required to reveal them.

pub mod classify;
pub mod cli;
pub mod crypto;
pub mod engine;
pub mod formats;
pub mod keyspace;
pub mod strength;
