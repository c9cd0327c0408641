//! 8-digit phone-number keyspace restricted by leading prefixes.
//!
//! Local subscriber numbers are 8 digits with a small set of valid
//! leading digits, so constraining the first digits collapses the space:
//! all four mobile/landline prefixes together still leave only
//! 4 * 10^7 = 40,000,000 candidates, and a 4-digit area prefix leaves
//! just 10^4.

use super::{pow10, validate_prefixes, Keyspace, KeyspaceError};

pub const PHONE_NUMBER_LEN: usize = 8;

/// Every 8-digit string extending any of the configured prefixes.
/// Ordered by (prefix list order, ascending numeric suffix).
#[derive(Debug, Clone)]
pub struct PhoneKeyspace {
    prefixes: Vec<String>,
    /// Candidates contributed by each prefix: 10^(8-len).
    block_sizes: Vec<u128>,
    cardinality: u128,
}

impl PhoneKeyspace {
    pub fn new<S: AsRef<str>>(prefixes: &[S]) -> Result<Self, KeyspaceError> {
        let prefixes: Vec<String> =
            prefixes.iter().map(|p| p.as_ref().to_string()).collect();
        validate_prefixes(&prefixes, PHONE_NUMBER_LEN)?;
        let block_sizes: Vec<u128> = prefixes
            .iter()
            .map(|p| pow10((PHONE_NUMBER_LEN - p.len()) as u32))
            .collect();
        let cardinality = block_sizes.iter().sum();
        Ok(PhoneKeyspace {
            prefixes,
            block_sizes,
            cardinality,
        })
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::Phone(self)
    }

    pub fn prefixes(&self) -> &[String] {
        &self.prefixes
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        let mut offset = index;
        for (prefix, block) in self.prefixes.iter().zip(&self.block_sizes) {
            if offset < *block {
                let width = PHONE_NUMBER_LEN - prefix.len();
                return Some(format_suffix(prefix, offset, width));
            }
            offset -= block;
        }
        None
    }

    pub fn describe(&self) -> String {
        format!("phone[{}]", self.prefixes.join(","))
    }
}

fn format_suffix(prefix: &str, value: u128, width: usize) -> String {
    if width == 0 {
        // Fully-specified prefix: the prefix is the sole candidate.
        prefix.to_string()
    } else {
        format!("{prefix}{value:0width$}")
    }
}
