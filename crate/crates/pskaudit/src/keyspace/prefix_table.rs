//! Phone-prefix → region table.
//!
//! Numbering plans assign meaning to leading digits (carrier type,
//! and for some blocks a geographic area), which is what makes
//! prefix-restricted phone keyspaces and region correlation possible.
//! The table is data, not code: `prefix<TAB>region-label` lines with
//! `#` comments, so other numbering plans can be dropped in.

use super::KeyspaceError;

/// Leading digits every entry must start with: local subscriber numbers
/// begin 3 (VoIP), 6 (fixed line), 8 or 9 (mobile).
const VALID_LEADING: [u8; 4] = *b"3689";

#[derive(Debug, Clone, Default)]
pub struct PhonePrefixTable {
    /// (prefix, region), sorted by descending prefix length then prefix,
    /// so the first match during lookup is the longest.
    entries: Vec<(String, String)>,
}

impl PhonePrefixTable {
    pub fn empty() -> Self {
        PhonePrefixTable::default()
    }

    /// Parse `prefix<TAB>region-label` lines. Prefixes are 1-8 digits
    /// starting with 3, 6, 8 or 9; duplicates keep the last occurrence.
    pub fn parse(text: &str) -> Result<Self, KeyspaceError> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (prefix, region) = line.split_once('\t').ok_or_else(|| {
                KeyspaceError::MalformedPrefixLine {
                    line: line_no,
                    reason: "expected prefix<TAB>region-label".to_string(),
                }
            })?;
            let prefix = prefix.trim();
            let region = region.trim();
            let digits_ok = !prefix.is_empty()
                && prefix.len() <= 8
                && prefix.bytes().all(|b| b.is_ascii_digit());
            if !digits_ok || !VALID_LEADING.contains(&prefix.as_bytes()[0]) {
                return Err(KeyspaceError::MalformedPrefixLine {
                    line: line_no,
                    reason: format!(
                        "prefix `{prefix}` must be 1-8 digits starting with 3, 6, 8 or 9"
                    ),
                });
            }
            if region.is_empty() {
                return Err(KeyspaceError::MalformedPrefixLine {
                    line: line_no,
                    reason: "empty region label".to_string(),
                });
            }
            if let Some(entry) = entries.iter_mut().find(|(p, _)| p == prefix) {
                entry.1 = region.to_string();
            } else {
                entries.push((prefix.to_string(), region.to_string()));
            }
        }
        entries.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(PhonePrefixTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Longest prefix of `number` present in the table, with its region.
    pub fn lookup(&self, number: &str) -> Option<(&str, &str)> {
        self.entries
            .iter()
            .find(|(prefix, _)| number.starts_with(prefix.as_str()))
            .map(|(prefix, region)| (prefix.as_str(), region.as_str()))
    }

    /// All prefixes, in lookup precedence order.
    pub fn prefixes(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(p, _)| p.as_str())
    }
}
