//! Wordlist keyspace with a deliberately small mutation-rule engine.
//!
//! Source lines are treated as raw bytes (real-world lists contain
//! arbitrary encodings). Rules expand each line into derived candidates;
//! the expanded stream is then filtered to valid passphrase shape
//! (printable ASCII, 8-63 bytes) and deduplicated, so the keyspace
//! still enumerates unique candidates with an exact cardinality.
//! Filtered-out and duplicate candidates are counted, not errors —
//! audits over dirty lists run to completion.
//!
//! Rule expansion order is fixed so enumeration is stable: all base
//! lines first, then case-toggled forms, then digit-appended forms,
//! then pairwise concatenations (including self-concatenation).

use super::{Keyspace, KeyspaceError, KeyspaceKind};
use std::path::Path;

/// Which mutation rules to apply. `RuleSet::none()` passes lines
/// through unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RuleSet {
    /// Append a single digit 0-9 to each line.
    pub append_digits: bool,
    /// Swap the case of every ASCII letter in the line.
    pub case_toggle: bool,
    /// Concatenate every ordered pair of lines (including a line with
    /// itself). Quadratic in list size; intended for short lists.
    pub concat_pairs: bool,
}

impl RuleSet {
    pub fn none() -> Self {
        RuleSet::default()
    }

    pub fn all() -> Self {
        RuleSet {
            append_digits: true,
            case_toggle: true,
            concat_pairs: true,
        }
    }

    pub fn any(&self) -> bool {
        self.append_digits || self.case_toggle || self.concat_pairs
    }

    /// Parse a `+`-separated rule list: `append-digits`, `case-toggle`,
    /// `concat-pairs`, or the shorthand `rules` / `all` for everything.
    pub fn parse(text: &str) -> Option<Self> {
        if text == "rules" || text == "all" {
            return Some(RuleSet::all());
        }
        let mut rules = RuleSet::none();
        for token in text.split('+') {
            match token {
                "append-digits" => rules.append_digits = true,
                "case-toggle" => rules.case_toggle = true,
                "concat-pairs" => rules.concat_pairs = true,
                _ => return None,
            }
        }
        Some(rules)
    }
}

/// Materialized, deduplicated candidate list from a wordlist source.
#[derive(Debug, Clone)]
pub struct WordlistKeyspace {
    candidates: Vec<String>,
    rules: RuleSet,
    /// Generated candidates dropped for length or character set.
    pub skipped: u64,
    /// Generated candidates dropped as byte-identical to an earlier one.
    pub deduplicated: u64,
    source: String,
}

impl WordlistKeyspace {
    pub fn from_path(path: &Path, rules: RuleSet) -> Result<Self, KeyspaceError> {
        let bytes = std::fs::read(path)
            .map_err(|e| KeyspaceError::SourceRead(format!("{}: {e}", path.display())))?;
        let mut ks = Self::from_bytes(&bytes, rules);
        ks.source = path.display().to_string();
        Ok(ks)
    }

    pub fn from_bytes(bytes: &[u8], rules: RuleSet) -> Self {
        let lines: Vec<&[u8]> = bytes
            .split(|b| *b == b'\n')
            .map(|line| line.strip_suffix(b"\r").unwrap_or(line))
            .filter(|line| !line.is_empty())
            .collect();

        let mut ks = WordlistKeyspace {
            candidates: Vec::new(),
            rules,
            skipped: 0,
            deduplicated: 0,
            source: "<memory>".to_string(),
        };
        let mut seen = std::collections::HashSet::new();
        let mut admit = |ks: &mut WordlistKeyspace, candidate: Vec<u8>| {
            if !is_valid_candidate(&candidate) {
                ks.skipped += 1;
            } else if !seen.insert(candidate.clone()) {
                ks.deduplicated += 1;
            } else {
                ks.candidates
                    .push(String::from_utf8(candidate).expect("printable ASCII"));
            }
        };

        for line in &lines {
            admit(&mut ks, line.to_vec());
        }
        if rules.case_toggle {
            for line in &lines {
                admit(&mut ks, toggle_case(line));
            }
        }
        if rules.append_digits {
            for line in &lines {
                for digit in b'0'..=b'9' {
                    let mut candidate = line.to_vec();
                    candidate.push(digit);
                    admit(&mut ks, candidate);
                }
            }
        }
        if rules.concat_pairs {
            for first in &lines {
                for second in &lines {
                    let mut candidate = first.to_vec();
                    candidate.extend_from_slice(second);
                    admit(&mut ks, candidate);
                }
            }
        }
        ks
    }

    /// Convenience for tests and examples: one line per slice element.
    pub fn from_lines<S: AsRef<str>>(lines: &[S], rules: RuleSet) -> Self {
        let joined: String = lines
            .iter()
            .map(|l| l.as_ref())
            .collect::<Vec<_>>()
            .join("\n");
        Self::from_bytes(joined.as_bytes(), rules)
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::Wordlist(self)
    }

    pub fn kind(&self) -> KeyspaceKind {
        if self.rules.any() {
            KeyspaceKind::WordlistWithRules
        } else {
            KeyspaceKind::Wordlist
        }
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    pub fn cardinality(&self) -> u128 {
        self.candidates.len() as u128
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        let index = usize::try_from(index).ok()?;
        self.candidates.get(index).cloned()
    }

    pub fn describe(&self) -> String {
        format!(
            "wordlist[{} n={} skipped={} deduped={}]",
            self.source,
            self.candidates.len(),
            self.skipped,
            self.deduplicated
        )
    }
}

fn is_valid_candidate(bytes: &[u8]) -> bool {
    (8..=63).contains(&bytes.len()) && bytes.iter().all(|b| (0x20..=0x7e).contains(b))
}

fn toggle_case(bytes: &[u8]) -> Vec<u8> {
    bytes
        .iter()
        .map(|b| {
            if b.is_ascii_lowercase() {
                b.to_ascii_uppercase()
            } else if b.is_ascii_uppercase() {
                b.to_ascii_lowercase()
            } else {
                *b
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_list_filters_short_lines() {
        let ks = WordlistKeyspace::from_lines(&["password1", "short"], RuleSet::none());
        assert_eq!(ks.cardinality(), 1);
        assert_eq!(ks.candidate(0).unwrap(), "password1");
        assert_eq!(ks.skipped, 1);
        assert_eq!(ks.deduplicated, 0);
    }

    #[test]
    fn concat_rule_rescues_short_lines() {
        let rules = RuleSet {
            concat_pairs: true,
            ..RuleSet::none()
        };
        let ks = WordlistKeyspace::from_lines(&["pass"], rules);
        // "pass" itself is too short; "passpass" is 8 chars and valid.
        assert_eq!(ks.cardinality(), 1);
        assert_eq!(ks.candidate(0).unwrap(), "passpass");
        assert_eq!(ks.skipped, 1);
    }

    #[test]
    fn empty_source_is_empty() {
        let ks = WordlistKeyspace::from_bytes(b"", RuleSet::none());
        assert_eq!(ks.cardinality(), 0);
        assert_eq!(ks.candidate(0), None);
    }

    #[test]
    fn case_toggle_rule() {
        let rules = RuleSet {
            case_toggle: true,
            ..RuleSet::none()
        };
        let ks = WordlistKeyspace::from_lines(&["Password1"], rules);
        let all: Vec<String> = ks.iter_all();
        assert_eq!(all, vec!["Password1", "pASSWORD1"]);
    }

    #[test]
    fn append_digits_rule() {
        let rules = RuleSet {
            append_digits: true,
            ..RuleSet::none()
        };
        let ks = WordlistKeyspace::from_lines(&["password"], rules);
        assert_eq!(ks.cardinality(), 11);
        assert_eq!(ks.candidate(0).unwrap(), "password");
        assert_eq!(ks.candidate(1).unwrap(), "password0");
        assert_eq!(ks.candidate(10).unwrap(), "password9");
    }

    #[test]
    fn digit_only_lines_survive_case_toggle_dedup() {
        let rules = RuleSet {
            case_toggle: true,
            ..RuleSet::none()
        };
        let ks = WordlistKeyspace::from_lines(&["12345678"], rules);
        // Toggling a digit-only line yields the same bytes; dedup keeps one.
        assert_eq!(ks.cardinality(), 1);
        assert_eq!(ks.deduplicated, 1);
    }

    #[test]
    fn non_ascii_lines_are_skipped_not_fatal() {
        let mut bytes = b"valid-pass-1\n".to_vec();
        bytes.extend_from_slice(&[0xff, 0xfe, 0x80, 0x81, 0x82, 0x83, 0x84, 0x85, b'\n']);
        let ks = WordlistKeyspace::from_bytes(&bytes, RuleSet::none());
        assert_eq!(ks.cardinality(), 1);
        assert_eq!(ks.skipped, 1);
    }

    #[test]
    fn crlf_and_blank_lines_handled() {
        let ks = WordlistKeyspace::from_bytes(b"password1\r\n\r\npassword2\r\n", RuleSet::none());
        assert_eq!(ks.cardinality(), 2);
        assert_eq!(ks.candidate(1).unwrap(), "password2");
    }

    #[test]
    fn rule_parsing() {
        assert_eq!(RuleSet::parse("rules"), Some(RuleSet::all()));
        assert_eq!(RuleSet::parse("all"), Some(RuleSet::all()));
        assert_eq!(
            RuleSet::parse("append-digits"),
            Some(RuleSet {
                append_digits: true,
                ..RuleSet::none()
            })
        );
        assert_eq!(
            RuleSet::parse("append-digits+concat-pairs"),
            Some(RuleSet {
                append_digits: true,
                concat_pairs: true,
                ..RuleSet::none()
            })
        );
        assert_eq!(RuleSet::parse("bogus"), None);
    }

    #[test]
    fn enumeration_order_is_stable() {
        let rules = RuleSet::all();
        let a = WordlistKeyspace::from_lines(&["alpha", "beta"], rules);
        let b = WordlistKeyspace::from_lines(&["alpha", "beta"], rules);
        assert_eq!(a.iter_all(), b.iter_all());
    }

    impl WordlistKeyspace {
        fn iter_all(&self) -> Vec<String> {
            (0..self.cardinality())
                .map(|i| self.candidate(i).unwrap())
                .collect()
        }
    }
}
