//! OUI (MAC prefix → manufacturer) table and per-vendor target counts.

use super::{FormatError, HashTarget};
use crate::crypto::MacAddress;
use std::collections::HashMap;

/// Bucket name for MAC prefixes absent from the loaded table.
pub const UNKNOWN_VENDOR: &str = "Unknown";

/// Immutable manufacturer lookup keyed by the first three MAC octets.
#[derive(Debug, Default, Clone)]
pub struct OuiTable {
    entries: HashMap<[u8; 3], String>,
    /// How many lines overwrote an earlier prefix during load.
    pub duplicate_count: usize,
}

impl OuiTable {
    /// Load from `XX-XX-XX<TAB>Manufacturer` lines. Blank lines and `#`
    /// comments are skipped; duplicate prefixes keep the last occurrence
    /// and bump `duplicate_count`.
    pub fn load(text: &str) -> Result<Self, FormatError> {
        let mut table = OuiTable::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (prefix_text, name) = line
                .split_once('\t')
                .ok_or(FormatError::MalformedOuiLine { line: line_no })?;
            let prefix = parse_prefix(prefix_text)
                .ok_or(FormatError::MalformedOuiLine { line: line_no })?;
            let name = name.trim();
            if name.is_empty() {
                return Err(FormatError::MalformedOuiLine { line: line_no });
            }
            if table.entries.insert(prefix, name.to_string()).is_some() {
                table.duplicate_count += 1;
            }
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Manufacturer for a MAC, if its prefix is known.
    pub fn lookup(&self, mac: MacAddress) -> Option<&str> {
        self.entries.get(&mac.oui()).map(String::as_str)
    }

    /// Total lookup: unknown prefixes map to [`UNKNOWN_VENDOR`].
    pub fn vendor_of(&self, mac: MacAddress) -> &str {
        self.lookup(mac).unwrap_or(UNKNOWN_VENDOR)
    }
}

fn parse_prefix(text: &str) -> Option<[u8; 3]> {
    let parts: Vec<&str> = text.trim().split('-').collect();
    if parts.len() != 3 {
        return None;
    }
    let mut prefix = [0u8; 3];
    for (i, part) in parts.iter().enumerate() {
        if part.len() != 2 {
            return None;
        }
        prefix[i] = u8::from_str_radix(part, 16).ok()?;
    }
    Some(prefix)
}

/// Count targets per manufacturer (by AP MAC). Sorted by descending count,
/// then name, so reports are stable; bucket counts sum to the input count.
pub fn vendor_report(targets: &[HashTarget], oui: &OuiTable) -> Vec<(String, usize)> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for target in targets {
        *counts.entry(oui.vendor_of(target.mac_ap)).or_default() += 1;
    }
    let mut report: Vec<(String, usize)> =
        counts.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    report.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crypto::{Essid, Pmkid};

    fn mac(s: &str) -> MacAddress {
        MacAddress::parse(s).unwrap()
    }

    fn target_with_ap(mac_ap: MacAddress) -> HashTarget {
        HashTarget {
            pmkid: Pmkid::from_bytes([0u8; 16]),
            mac_ap,
            mac_sta: mac("66778899aabb"),
            essid: Essid::from_text("X").unwrap(),
            source_line: 0,
        }
    }

    #[test]
    fn loads_and_looks_up() {
        let table = OuiTable::load("28-6C-07\tTP-LINK\n").unwrap();
        assert_eq!(table.lookup(mac("28:6c:07:12:34:56")), Some("TP-LINK"));
        assert_eq!(table.lookup(mac("00:00:00:00:00:00")), None);
        assert_eq!(table.vendor_of(mac("00:00:00:00:00:00")), UNKNOWN_VENDOR);
    }

    #[test]
    fn empty_stream_gives_total_unknown() {
        let table = OuiTable::load("").unwrap();
        assert!(table.is_empty());
        assert_eq!(table.vendor_of(mac("28:6c:07:12:34:56")), UNKNOWN_VENDOR);
    }

    #[test]
    fn duplicate_prefix_last_wins_with_warning() {
        let table = OuiTable::load("28-6C-07\tOld Name\n28-6C-07\tNew Name\n").unwrap();
        assert_eq!(table.lookup(mac("28:6c:07:00:00:00")), Some("New Name"));
        assert_eq!(table.duplicate_count, 1);
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn malformed_lines_are_rejected_with_line_number() {
        let err = OuiTable::load("28-6C-07\tOK\nnot-an-entry\n").unwrap_err();
        assert_eq!(err, FormatError::MalformedOuiLine { line: 2 });
        // Space instead of tab is malformed too.
        assert!(OuiTable::load("28-6C-07 NoTab\n").is_err());
        assert!(OuiTable::load("28-6C\tTooShort\n").is_err());
    }

    #[test]
    fn vendor_report_counts_partition_targets() {
        let table =
            OuiTable::load("AA-AA-AA\tAlpha\nBB-BB-BB\tBeta\nCC-CC-CC\tGamma\n").unwrap();
        let mut targets = Vec::new();
        for _ in 0..5 {
            targets.push(target_with_ap(mac("aaaaaa000001")));
        }
        for _ in 0..3 {
            targets.push(target_with_ap(mac("bbbbbb000002")));
        }
        for _ in 0..2 {
            targets.push(target_with_ap(mac("cccccc000003")));
        }
        let report = vendor_report(&targets, &table);
        assert_eq!(
            report,
            vec![
                ("Alpha".to_string(), 5),
                ("Beta".to_string(), 3),
                ("Gamma".to_string(), 2),
            ]
        );
        let total: usize = report.iter().map(|(_, n)| n).sum();
        assert_eq!(total, targets.len());
    }

    #[test]
    fn vendor_report_single_bucket_and_empty() {
        let table = OuiTable::load("AA-AA-AA\tAlpha\n").unwrap();
        let targets = vec![
            target_with_ap(mac("aaaaaa000001")),
            target_with_ap(mac("aaaaaa000002")),
        ];
        assert_eq!(vendor_report(&targets, &table), vec![("Alpha".to_string(), 2)]);
        assert!(vendor_report(&[], &table).is_empty());
    }
}
