//! Pattern classification and reporting for recovered passphrases.
//!
//! Recovered passphrases cluster into a handful of guessable shapes —
//! phone numbers, national ID patterns, calendar dates, vendor
//! defaults, dictionary words — and the value of an audit is showing
//! *which* shapes dominate, not the secrets themselves. This module
//! assigns each passphrase exactly one label, aggregates label
//! distributions, correlates phone-shaped passphrases with area
//! prefixes, and masks passphrase text for safe reporting.

use crate::keyspace::{
    is_valid_nric, matches_checksum_last8, matches_prefix_first8, DateFormat, DefaultDictKeyspace,
    NricNumber, PhonePrefixTable,
};
use chrono::Datelike;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("passphrase has {0} characters; classification requires at least 8")]
pub struct TooShortError(pub usize);

/// The six-way passphrase taxonomy. Every classified passphrase gets
/// exactly one label; overlaps are resolved by [`classify`]'s
/// precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Exact match against the vendor-default table.
    Default,
    /// National ID shape: full 9-char ID, prefix-first 8, or
    /// checksum-last 8.
    Nric,
    /// Local phone-number shape, or a phone-prefix-table match.
    Phone,
    /// A valid calendar date, day-month-year.
    DateOfSignificance,
    /// Dictionary word, optionally with up to 4 trailing digits.
    Dictionary,
    /// None of the above.
    UserDefined,
}

/// All labels, in classification precedence order. Exact-match evidence
/// outranks shape evidence: a vendor default that happens to look like
/// a phone number is still a vendor default. Phone outranks date
/// because overlap strings (8 digits, leading 3) are far more often
/// numbers than birthdays in observed distributions.
pub const LABELS: [ClassLabel; 6] = [
    ClassLabel::Default,
    ClassLabel::Nric,
    ClassLabel::Phone,
    ClassLabel::DateOfSignificance,
    ClassLabel::Dictionary,
    ClassLabel::UserDefined,
];

impl ClassLabel {
    /// Stable machine-readable identifier (JSON output, CLI args).
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Phone => "phone",
            ClassLabel::UserDefined => "user-defined",
            ClassLabel::Dictionary => "dictionary",
            ClassLabel::Default => "default",
            ClassLabel::DateOfSignificance => "date",
            ClassLabel::Nric => "nric",
        }
    }

    /// Human-readable name for text reports.
    pub fn display_name(&self) -> &'static str {
        match self {
            ClassLabel::Phone => "Phone number",
            ClassLabel::UserDefined => "User-defined",
            ClassLabel::Dictionary => "Dictionary word",
            ClassLabel::Default => "Vendor default",
            ClassLabel::DateOfSignificance => "Date of significance",
            ClassLabel::Nric => "NRIC pattern",
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // `pad` (not `write_str`) so `{:<22}` column formatting works.
        f.pad(self.display_name())
    }
}

/// One classified passphrase: the label, why it matched, and the
/// masked rendering safe for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedPassphrase {
    pub passphrase: String,
    pub label: ClassLabel,
    /// The matched rule — table entry source, prefix/region, dictionary
    /// word, parsed date, or ID form.
    pub evidence: String,
    pub masked: String,
}

/// Reference data the classifier consults. All fields immutable after
/// construction; `classify` is a pure function of (passphrase, context).
#[derive(Debug, Clone)]
pub struct ClassifyContext {
    pub defaults: DefaultDictKeyspace,
    /// Dictionary words, matched case-insensitively.
    pub dictionary: HashSet<String>,
    pub phone_prefixes: PhonePrefixTable,
}

impl ClassifyContext {
    /// Built-in defaults table, empty dictionary, empty prefix table.
    pub fn new() -> Self {
        ClassifyContext {
            defaults: DefaultDictKeyspace::built_in(),
            dictionary: HashSet::new(),
            phone_prefixes: PhonePrefixTable::empty(),
        }
    }

    pub fn with_defaults(mut self, defaults: DefaultDictKeyspace) -> Self {
        self.defaults = defaults;
        self
    }

    pub fn with_dictionary<I, S>(mut self, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.dictionary = words
            .into_iter()
            .map(|w| w.as_ref().to_ascii_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        self
    }

    pub fn with_phone_prefixes(mut self, table: PhonePrefixTable) -> Self {
        self.phone_prefixes = table;
        self
    }
}

impl Default for ClassifyContext {
    fn default() -> Self {
        Self::new()
    }
}

/// Maximum digits strippable from a dictionary-plus-digits passphrase.
const DICT_TRAILING_DIGITS: usize = 4;
/// Leading digits of local 8-digit phone numbers.
const PHONE_LEADING: [char; 4] = ['3', '6', '8', '9'];

/// Assign exactly one label, trying each rule in [`LABELS`] order and
/// falling through to `UserDefined`.
pub fn classify(
    passphrase: &str,
    context: &ClassifyContext,
) -> Result<ClassifiedPassphrase, TooShortError> {
    let masked = mask(passphrase)?;
    let (label, evidence) = label_with_evidence(passphrase, context);
    Ok(ClassifiedPassphrase {
        passphrase: passphrase.to_string(),
        label,
        evidence,
        masked,
    })
}

fn label_with_evidence(passphrase: &str, context: &ClassifyContext) -> (ClassLabel, String) {
    if let Some(source) = context.defaults.source_of(passphrase) {
        return (
            ClassLabel::Default,
            format!("default passphrase for {source}"),
        );
    }

    if let Some(id) = NricNumber::parse(passphrase) {
        debug_assert!(is_valid_nric(passphrase));
        return (
            ClassLabel::Nric,
            format!("full ID with valid checksum (prefix {})", id.prefix),
        );
    }
    if matches_prefix_first8(passphrase) {
        return (
            ClassLabel::Nric,
            "ID prefix letter + 7 digits (checksum dropped)".to_string(),
        );
    }
    if matches_checksum_last8(passphrase) {
        return (
            ClassLabel::Nric,
            "7 digits + valid checksum letter (prefix dropped)".to_string(),
        );
    }

    let all_digits = !passphrase.is_empty() && passphrase.bytes().all(|b| b.is_ascii_digit());
    if all_digits {
        // Longest-prefix table match labels any digit string as a phone
        // number (covers country-code-prefixed 10-digit entries); the
        // bare 8-digit local shape needs no table.
        if let Some((prefix, region)) = context.phone_prefixes.lookup(passphrase) {
            return (
                ClassLabel::Phone,
                format!("phone prefix {prefix} ({region})"),
            );
        }
        let leading = passphrase.chars().next().unwrap_or(' ');
        if passphrase.len() == 8 && PHONE_LEADING.contains(&leading) {
            return (
                ClassLabel::Phone,
                format!("8-digit phone shape, leading {leading}"),
            );
        }
        if let Some(date) = DateFormat::DayMonthYear.parse(passphrase) {
            return (
                ClassLabel::DateOfSignificance,
                format!(
                    "calendar date {:02}-{:02}-{:04}",
                    date.day(),
                    date.month(),
                    date.year()
                ),
            );
        }
    }

    if let Some(evidence) = dictionary_evidence(passphrase, &context.dictionary) {
        return (ClassLabel::Dictionary, evidence);
    }

    (ClassLabel::UserDefined, "no known pattern".to_string())
}

/// Full-string dictionary match, or a match after stripping 1–4
/// trailing digits ("password1"-style). Case-insensitive.
fn dictionary_evidence(passphrase: &str, dictionary: &HashSet<String>) -> Option<String> {
    if dictionary.is_empty() {
        return None;
    }
    let lower = passphrase.to_ascii_lowercase();
    if dictionary.contains(&lower) {
        return Some(format!("dictionary word \"{lower}\""));
    }
    for stripped_count in 1..=DICT_TRAILING_DIGITS {
        if lower.len() <= stripped_count {
            break;
        }
        let (stem, tail) = lower.split_at(lower.len() - stripped_count);
        if !tail.bytes().all(|b| b.is_ascii_digit()) {
            break;
        }
        if dictionary.contains(stem) {
            let plural = if stripped_count == 1 { "digit" } else { "digits" };
            return Some(format!(
                "dictionary word \"{stem}\" + {stripped_count} trailing {plural}"
            ));
        }
    }
    None
}

/// Redact the tail of a passphrase: keep the first `len − ⌈len/2⌉`
/// characters, replace the final `max(4, ⌈len/2⌉)` with `x`. An 8-char
/// passphrase masks to 4+4 (`9891xxxx`); a 10-char one to 5+5
/// (`65674xxxxx`). Never reveals more than the first ⌊len/2⌋ characters.
pub fn mask(passphrase: &str) -> Result<String, TooShortError> {
    let chars: Vec<char> = passphrase.chars().collect();
    if chars.len() < 8 {
        return Err(TooShortError(chars.len()));
    }
    let masked_len = chars.len().div_ceil(2).max(4);
    let keep = chars.len() - masked_len;
    let mut out: String = chars[..keep].iter().collect();
    out.extend(std::iter::repeat_n('x', masked_len));
    Ok(out)
}

/// One row of a label distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelShare {
    pub label: ClassLabel,
    pub count: usize,
    /// Percentage of the total, rounded to 2 decimal places; 0.00 for
    /// an empty input.
    pub percent: f64,
}

/// Label counts and percentages over a classified set. Always contains
/// all six labels, ordered by descending count (ties in precedence
/// order).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    pub total: usize,
    pub shares: Vec<LabelShare>,
}

pub fn distribution(classified: &[ClassifiedPassphrase]) -> Distribution {
    let total = classified.len();
    let mut shares: Vec<LabelShare> = LABELS
        .iter()
        .map(|&label| {
            let count = classified.iter().filter(|c| c.label == label).count();
            let percent = if total == 0 {
                0.0
            } else {
                round2(count as f64 * 100.0 / total as f64)
            };
            LabelShare {
                label,
                count,
                percent,
            }
        })
        .collect();
    shares.sort_by(|a, b| b.count.cmp(&a.count).then(a.label.cmp(&b.label)));
    Distribution { total, shares }
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Bucket phone-labeled passphrases by the longest matching prefix's
/// region; digit strings no prefix covers land in `"unmapped"`. Sorted
/// by descending count, then region name.
pub fn geo_correlate(
    classified: &[ClassifiedPassphrase],
    table: &PhonePrefixTable,
) -> Vec<(String, usize)> {
    let mut counts: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    for item in classified {
        if item.label != ClassLabel::Phone {
            continue;
        }
        let region = table
            .lookup(&item.passphrase)
            .map(|(_, region)| region.to_string())
            .unwrap_or_else(|| "unmapped".to_string());
        *counts.entry(region).or_insert(0) += 1;
    }
    let mut rows: Vec<(String, usize)> = counts.into_iter().collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    rows
}
