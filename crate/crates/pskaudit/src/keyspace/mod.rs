//! Candidate keyspaces: finite, exactly countable, deterministically
//! ordered sets of passphrase guesses.
//!
//! Every keyspace obeys the same contract:
//!
//! - `cardinality()` is exact (no estimates);
//! - `candidate(i)` is defined for all `0 <= i < cardinality()` and the
//!   mapping is stable across runs and platforms;
//! - `split(parts)` returns contiguous disjoint index ranges covering the
//!   whole space with sizes differing by at most one, which is what lets
//!   the crack engine hand out work and still report deterministic
//!   lowest-index matches.
//!
//! Indices are `u128` so even the widest digit spaces fit without
//! overflow.

mod date;
mod defaults;
mod digits;
mod nric;
mod phone;
mod prefix_table;
mod wordlist;

pub use date::{DateFormat, DateKeyspace};
pub use defaults::{DefaultDictKeyspace, DefaultEntry};
pub use digits::DigitsKeyspace;
pub use nric::{
    checksum_letter, is_valid_nric, matches_checksum_last8, matches_prefix_first8, CaseMode,
    NricForm, NricKeyspace, NricNumber,
};
pub use phone::PhoneKeyspace;
pub use prefix_table::PhonePrefixTable;
pub use wordlist::{RuleSet, WordlistKeyspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KeyspaceError {
    #[error("prefix `{a}` overlaps prefix `{b}` (one extends the other)")]
    OverlappingPrefix { a: String, b: String },
    #[error("prefix `{0}` contains a non-digit character")]
    NonDigitPrefix(String),
    #[error("prefix `{0}` is longer than the candidate length")]
    PrefixTooLong(String),
    #[error("digit length {0} is outside the supported range 8-38")]
    LengthOutOfRange(usize),
    #[error("invalid year range {first}-{last} (need 1000 <= first <= last <= 9999)")]
    YearRange { first: i32, last: i32 },
    #[error("`{0}` is not a known ID prefix letter (expected S, T, F or G)")]
    InvalidNricPrefix(char),
    #[error("prefix set is empty")]
    EmptyPrefixSet,
    #[error("cannot split a keyspace into zero parts")]
    ZeroParts,
    #[error("defaults file line {line}: expected manufacturer<TAB>model<TAB>psk<TAB>wps-pin")]
    MalformedDefaultsLine { line: usize },
    #[error("prefix table line {line}: {reason}")]
    MalformedPrefixLine { line: usize, reason: String },
    #[error("reading wordlist: {0}")]
    SourceRead(String),
}

/// Which family a keyspace belongs to; carried through crack results and
/// progress reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyspaceKind {
    Phone,
    Digits,
    NricPrefixFirst,
    NricChecksumLast,
    NricFull,
    DefaultDict,
    Wordlist,
    WordlistWithRules,
    DateOfSignificance,
}

impl KeyspaceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            KeyspaceKind::Phone => "phone",
            KeyspaceKind::Digits => "digits",
            KeyspaceKind::NricPrefixFirst => "nric-prefix-first",
            KeyspaceKind::NricChecksumLast => "nric-checksum-last",
            KeyspaceKind::NricFull => "nric-full",
            KeyspaceKind::DefaultDict => "defaults",
            KeyspaceKind::Wordlist => "wordlist",
            KeyspaceKind::WordlistWithRules => "wordlist+rules",
            KeyspaceKind::DateOfSignificance => "date",
        }
    }
}

impl std::fmt::Display for KeyspaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.as_str())
    }
}

/// A finite ordered candidate set. Immutable after construction; all
/// methods are safe for concurrent use.
#[derive(Debug, Clone)]
pub enum Keyspace {
    Phone(PhoneKeyspace),
    Digits(DigitsKeyspace),
    Date(DateKeyspace),
    Nric(NricKeyspace),
    DefaultDict(DefaultDictKeyspace),
    Wordlist(WordlistKeyspace),
}

impl Keyspace {
    pub fn kind(&self) -> KeyspaceKind {
        match self {
            Keyspace::Phone(_) => KeyspaceKind::Phone,
            Keyspace::Digits(_) => KeyspaceKind::Digits,
            Keyspace::Date(_) => KeyspaceKind::DateOfSignificance,
            Keyspace::Nric(ks) => ks.kind(),
            Keyspace::DefaultDict(_) => KeyspaceKind::DefaultDict,
            Keyspace::Wordlist(ks) => ks.kind(),
        }
    }

    /// Exact number of candidates.
    pub fn cardinality(&self) -> u128 {
        match self {
            Keyspace::Phone(ks) => ks.cardinality(),
            Keyspace::Digits(ks) => ks.cardinality(),
            Keyspace::Date(ks) => ks.cardinality(),
            Keyspace::Nric(ks) => ks.cardinality(),
            Keyspace::DefaultDict(ks) => ks.cardinality(),
            Keyspace::Wordlist(ks) => ks.cardinality(),
        }
    }

    /// The `i`-th candidate, or `None` past the end. Stable: the same
    /// parameters always yield the same byte sequence at the same index.
    pub fn candidate(&self, index: u128) -> Option<String> {
        match self {
            Keyspace::Phone(ks) => ks.candidate(index),
            Keyspace::Digits(ks) => ks.candidate(index),
            Keyspace::Date(ks) => ks.candidate(index),
            Keyspace::Nric(ks) => ks.candidate(index),
            Keyspace::DefaultDict(ks) => ks.candidate(index),
            Keyspace::Wordlist(ks) => ks.candidate(index),
        }
    }

    /// Contiguous, disjoint `[start, end)` ranges covering the whole
    /// index space; sizes differ by at most 1, earlier parts get the
    /// remainder.
    pub fn split(&self, parts: usize) -> Result<Vec<(u128, u128)>, KeyspaceError> {
        split_range(self.cardinality(), parts)
    }

    /// Short human-readable summary for logs and reports.
    pub fn describe(&self) -> String {
        match self {
            Keyspace::Phone(ks) => ks.describe(),
            Keyspace::Digits(ks) => ks.describe(),
            Keyspace::Date(ks) => ks.describe(),
            Keyspace::Nric(ks) => ks.describe(),
            Keyspace::DefaultDict(ks) => ks.describe(),
            Keyspace::Wordlist(ks) => ks.describe(),
        }
    }

    /// Iterate all candidates in order (small keyspaces / tests).
    pub fn iter(&self) -> impl Iterator<Item = String> + '_ {
        (0..self.cardinality()).map_while(move |i| self.candidate(i))
    }
}

/// Balanced partition of `[0, cardinality)` into `parts` ranges.
pub fn split_range(cardinality: u128, parts: usize) -> Result<Vec<(u128, u128)>, KeyspaceError> {
    if parts == 0 {
        return Err(KeyspaceError::ZeroParts);
    }
    let parts_u = parts as u128;
    let base = cardinality / parts_u;
    let remainder = (cardinality % parts_u) as usize;
    let mut ranges = Vec::with_capacity(parts);
    let mut start = 0u128;
    for i in 0..parts {
        let len = base + u128::from(i < remainder);
        ranges.push((start, start + len));
        start += len;
    }
    Ok(ranges)
}

pub(crate) fn pow10(exp: u32) -> u128 {
    10u128.pow(exp)
}

/// Shared prefix validation: digit-only, bounded length, mutually
/// non-overlapping (no prefix may extend another, or index arithmetic
/// would double-count).
pub(crate) fn validate_prefixes(prefixes: &[String], max_len: usize) -> Result<(), KeyspaceError> {
    for p in prefixes {
        if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
            return Err(KeyspaceError::NonDigitPrefix(p.clone()));
        }
        if p.len() > max_len {
            return Err(KeyspaceError::PrefixTooLong(p.clone()));
        }
    }
    for (i, a) in prefixes.iter().enumerate() {
        for b in &prefixes[i + 1..] {
            if a.starts_with(b.as_str()) || b.starts_with(a.as_str()) {
                return Err(KeyspaceError::OverlappingPrefix {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    Ok(())
}
