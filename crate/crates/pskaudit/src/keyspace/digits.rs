//! All-digits keyspace of a fixed length, with optional prefix exclusion.
//!
//! `digits(8)` is the classic 10^8 = 100,000,000 space of numeric-only
//! passphrases. The exclusion variant subtracts prefix blocks already
//! covered by an earlier, more targeted pass (for example a phone pass
//! over 3/6/8/9), so a follow-up sweep does not re-test them.

use super::{pow10, validate_prefixes, Keyspace, KeyspaceError};

const MIN_LEN: usize = 8;
// 10^38 still fits in u128; longer digit strings would overflow exact
// index arithmetic (and exceed any practical search anyway).
const MAX_LEN: usize = 38;

#[derive(Debug, Clone)]
pub struct DigitsKeyspace {
    length: usize,
    /// Excluded numeric ranges as (start_value, size), ascending, disjoint.
    excluded: Vec<(u128, u128)>,
    excluded_prefixes: Vec<String>,
    cardinality: u128,
}

impl DigitsKeyspace {
    /// The full 10^length space in ascending numeric order.
    pub fn new(length: usize) -> Result<Self, KeyspaceError> {
        Self::with_excluded_prefixes::<&str>(length, &[])
    }

    /// Same ordering, skipping every value that extends one of
    /// `excluded_prefixes`. Prefixes must be digit-only, no longer than
    /// `length`, and mutually non-overlapping.
    pub fn with_excluded_prefixes<S: AsRef<str>>(
        length: usize,
        excluded_prefixes: &[S],
    ) -> Result<Self, KeyspaceError> {
        if !(MIN_LEN..=MAX_LEN).contains(&length) {
            return Err(KeyspaceError::LengthOutOfRange(length));
        }
        let excluded_prefixes: Vec<String> = excluded_prefixes
            .iter()
            .map(|p| p.as_ref().to_string())
            .collect();
        validate_prefixes(&excluded_prefixes, length)?;

        let mut excluded: Vec<(u128, u128)> = excluded_prefixes
            .iter()
            .map(|p| {
                let size = pow10((length - p.len()) as u32);
                let start = p.parse::<u128>().expect("digit-only prefix") * size;
                (start, size)
            })
            .collect();
        excluded.sort_unstable();

        let removed: u128 = excluded.iter().map(|(_, size)| size).sum();
        Ok(DigitsKeyspace {
            length,
            excluded,
            excluded_prefixes,
            cardinality: pow10(length as u32) - removed,
        })
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::Digits(self)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        if index >= self.cardinality {
            return None;
        }
        // Shift the index past every excluded block below it; blocks are
        // disjoint and ascending, so one forward pass lands on the
        // index-th surviving value.
        let mut value = index;
        for (start, size) in &self.excluded {
            if value >= *start {
                value += size;
            } else {
                break;
            }
        }
        Some(format!("{value:0width$}", width = self.length))
    }

    pub fn describe(&self) -> String {
        if self.excluded_prefixes.is_empty() {
            format!("digits[{}]", self.length)
        } else {
            format!(
                "digits[{} skip {}]",
                self.length,
                self.excluded_prefixes.join(",")
            )
        }
    }
}
