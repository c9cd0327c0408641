//! Factory-default passphrase dictionary.
//!
//! Consumer routers ship with printed default PSKs and WPS PINs, and
//! many stay unchanged for the life of the device. A small built-in
//! list covers models observed defaulting to guessable values; a
//! vendor-defaults file (`manufacturer<TAB>model<TAB>psk<TAB>wps-pin`
//! per line, empty fields allowed) extends it.

use super::{Keyspace, KeyspaceError, KeyspaceKind};

/// Built-in (model, value) pairs: the PSK then WPS PIN of each model,
/// in a fixed order, byte-identical duplicates collapsed.
const BUILT_IN: [(&str, &str); 11] = [
    ("Aztech DSL8800GR(S)", "0001543795"),
    ("Aztech DSL8800GR(S)", "73930912"),
    ("D-Link DIR-878", "gcpjc44336"),
    ("D-Link DIR-878", "82200640"),
    ("Linksys EA8500", "vm0r76l6tq"),
    ("Linksys EA8500", "05855742"),
    ("Linksys WRT1900ACS", "mnqe74ecv4"),
    ("Linksys WRT1900ACS", "47062191"),
    ("PROLiNK PRC3801", "prolink12345"),
    // This model reuses one 8-digit value as both PSK and WPS PIN, so a
    // single entry covers both.
    ("TP-Link Archer C9", "25203738"),
    ("TP-Link Archer C9 (WPS)", "25203738"),
];

/// One candidate value plus where it came from (for report evidence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultEntry {
    pub value: String,
    pub source: String,
}

/// Stable-ordered list of default passphrases and PINs.
#[derive(Debug, Clone)]
pub struct DefaultDictKeyspace {
    entries: Vec<DefaultEntry>,
}

impl DefaultDictKeyspace {
    /// Just the built-in list.
    pub fn built_in() -> Self {
        let mut ks = DefaultDictKeyspace {
            entries: Vec::new(),
        };
        for (model, value) in BUILT_IN {
            ks.push(value, model);
        }
        ks
    }

    /// Built-ins plus entries from a vendor-defaults file, appended in
    /// file order (PSK before WPS PIN per line), deduplicated.
    pub fn with_vendor_file(text: &str) -> Result<Self, KeyspaceError> {
        let mut ks = Self::built_in();
        ks.extend_from_vendor_file(text)?;
        Ok(ks)
    }

    pub fn extend_from_vendor_file(&mut self, text: &str) -> Result<(), KeyspaceError> {
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(KeyspaceError::MalformedDefaultsLine { line: line_no });
            }
            let source = format!("{} {}", fields[0].trim(), fields[1].trim());
            for value in [fields[2].trim(), fields[3].trim()] {
                if !value.is_empty() {
                    self.push(value, &source);
                }
            }
        }
        Ok(())
    }

    fn push(&mut self, value: &str, source: &str) {
        if self.entries.iter().any(|e| e.value == value) {
            return;
        }
        self.entries.push(DefaultEntry {
            value: value.to_string(),
            source: source.trim().to_string(),
        });
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::DefaultDict(self)
    }

    pub fn kind(&self) -> KeyspaceKind {
        KeyspaceKind::DefaultDict
    }

    pub fn entries(&self) -> &[DefaultEntry] {
        &self.entries
    }

    /// Source description for a value, if it is in the list.
    pub fn source_of(&self, value: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| e.value == value)
            .map(|e| e.source.as_str())
    }

    pub fn contains(&self, value: &str) -> bool {
        self.source_of(value).is_some()
    }

    pub fn cardinality(&self) -> u128 {
        self.entries.len() as u128
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        let index = usize::try_from(index).ok()?;
        self.entries.get(index).map(|e| e.value.clone())
    }

    pub fn describe(&self) -> String {
        format!("defaults[{}]", self.entries.len())
    }
}
