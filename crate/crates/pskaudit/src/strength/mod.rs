//! Passphrase strength estimation: entropy bounds plus a keyboard
//! vector-space trace.
//!
//! Entropy alone overrates passphrases with predictable physical entry
//! patterns — `qwertyui` draws from a 26-letter pool but never leaves
//! one keyboard row. The strength report therefore pairs the entropy
//! bound with a trace score measuring per-step typing effort, and bands
//! the result on the order-sensitive component.

mod entropy;
mod layout;
mod trace;

pub use entropy::{
    entropy_bits, entropy_bits_for, infer_alpha, keyspace_count, mixed_pool_bits, EntropyParams,
    POOL_DIGITS, POOL_FULL, POOL_LOWERCASE, POOL_SYMBOLS, POOL_UPPERCASE,
};
pub use layout::{Half, KeyPosition, KeyboardLayout, PRINTABLE_ASCII_COUNT};
pub use trace::{trace_passphrase, Marker, TraceResult};

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StrengthError {
    #[error("invalid entropy parameters alpha={alpha} c={c} n={n} (need alpha>=1, c>=1, n<c)")]
    InvalidParams { alpha: u32, c: u32, n: u32 },
    #[error("character {0:?} is not on the keyboard layout")]
    UnmappableCharacter(char),
    #[error("layout line {line}: {reason}")]
    MalformedLayoutLine { line: usize, reason: String },
    #[error("layout character set: {detail}")]
    LayoutCharacterSet { detail: String },
}

/// Trace-score band thresholds. Calibrated so the canonical lazy inputs
/// (`12345678`, `qwertyui`, repeated keys) land in `Weak`; tunable by
/// recompiling, deliberately not runtime options.
pub const BAND_WEAK_BELOW: f64 = 1.2;
pub const BAND_MODERATE_BELOW: f64 = 2.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrengthBand {
    Weak,
    Moderate,
    Strong,
}

impl StrengthBand {
    pub fn from_score(score: f64) -> Self {
        if score < BAND_WEAK_BELOW {
            StrengthBand::Weak
        } else if score < BAND_MODERATE_BELOW {
            StrengthBand::Moderate
        } else {
            StrengthBand::Strong
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StrengthBand::Weak => "weak",
            StrengthBand::Moderate => "moderate",
            StrengthBand::Strong => "strong",
        }
    }
}

impl std::fmt::Display for StrengthBand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.as_str())
    }
}

/// Combined strength assessment for one passphrase.
#[derive(Debug, Clone)]
pub struct StrengthReport {
    pub length: usize,
    /// Pool size inferred from the character classes present.
    pub inferred_alpha: u32,
    /// Entropy bound assuming no characters are known.
    pub entropy_bits: f64,
    /// Exact pool^length candidate count.
    pub keyspace_count: BigUint,
    pub trace: TraceResult,
    pub band: StrengthBand,
}

/// Assess a passphrase: infer the character pool, bound the entropy,
/// trace the typing path, and band the trace score.
pub fn strength_report(
    passphrase: &str,
    layout: &KeyboardLayout,
) -> Result<StrengthReport, StrengthError> {
    let trace = trace_passphrase(passphrase, layout)?;
    let length = passphrase.chars().count();
    let inferred_alpha = infer_alpha(passphrase);
    let (entropy, count) = if length == 0 {
        (0.0, BigUint::from(0u8))
    } else {
        (
            entropy_bits_for(inferred_alpha, length as u32, 0)?,
            keyspace_count(inferred_alpha, length as u32)?,
        )
    };
    let band = StrengthBand::from_score(trace.score);
    Ok(StrengthReport {
        length,
        inferred_alpha,
        entropy_bits: entropy,
        keyspace_count: count,
        trace,
        band,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_run_is_weak() {
        let report = strength_report("12345678", KeyboardLayout::qwerty()).unwrap();
        assert_eq!(report.band, StrengthBand::Weak);
        assert_eq!(report.inferred_alpha, 10);
        assert!((report.entropy_bits - 26.58).abs() < 0.01);
        assert_eq!(report.keyspace_count.to_string(), "100000000");
    }

    #[test]
    fn repeated_key_is_weak() {
        let report = strength_report("aaaaaaaa", KeyboardLayout::qwerty()).unwrap();
        assert_eq!(report.band, StrengthBand::Weak);
        assert_eq!(report.trace.score, 0.0);
    }

    #[test]
    fn keyboard_walk_is_weak_despite_letter_pool() {
        let report = strength_report("qwertyui", KeyboardLayout::qwerty()).unwrap();
        assert_eq!(report.band, StrengthBand::Weak);
        // Entropy alone would have suggested a 26-character pool...
        assert_eq!(report.inferred_alpha, 26);
        assert!(report.entropy_bits > 37.0);
        // ...but the trace exposes the single-row walk.
        assert!(report.trace.score < 1.2);
    }

    #[test]
    fn entropy_is_order_blind_but_trace_is_not() {
        // An anagram pair: identical character multiset, different order.
        let a = strength_report("qwertyui", KeyboardLayout::qwerty()).unwrap();
        let b = strength_report("qwreytiu", KeyboardLayout::qwerty()).unwrap();
        assert_eq!(a.entropy_bits, b.entropy_bits);
        assert_ne!(a.trace.score, b.trace.score);
    }

    #[test]
    fn roaming_mixed_case_scores_higher() {
        let weak = strength_report("12345678", KeyboardLayout::qwerty()).unwrap();
        let strong = strength_report("Zq8!Mx2&Pv", KeyboardLayout::qwerty()).unwrap();
        assert!(strong.trace.score > weak.trace.score);
        assert_ne!(strong.band, StrengthBand::Weak);
    }

    #[test]
    fn band_thresholds() {
        assert_eq!(StrengthBand::from_score(0.0), StrengthBand::Weak);
        assert_eq!(StrengthBand::from_score(1.19), StrengthBand::Weak);
        assert_eq!(StrengthBand::from_score(1.2), StrengthBand::Moderate);
        assert_eq!(StrengthBand::from_score(2.49), StrengthBand::Moderate);
        assert_eq!(StrengthBand::from_score(2.5), StrengthBand::Strong);
    }

    #[test]
    fn unmappable_character_propagates() {
        assert!(matches!(
            strength_report("pässword", KeyboardLayout::qwerty()),
            Err(StrengthError::UnmappableCharacter('ä'))
        ));
    }
}
