//! Entropy bounds for passphrases over known character pools.
//!
//! A passphrase drawn uniformly from an alphabet of `alpha` characters
//! with length `c` carries `log2(alpha^c) = c * log2(alpha)` bits. Every
//! character an attacker already knows removes `log2(alpha)` bits, which
//! is the whole story of prefix-guessing: pinning 4 of 8 digits halves
//! the entropy from 26.58 to 13.29 bits.

use super::StrengthError;
use num_bigint::BigUint;

/// Character-pool sizes used when inferring `alpha` from a passphrase's
/// composition. The symbol pool counts the 18 symbols commonly allowed
/// by router firmware, giving the familiar 80-character full pool.
pub const POOL_DIGITS: u32 = 10;
pub const POOL_LOWERCASE: u32 = 26;
pub const POOL_UPPERCASE: u32 = 26;
pub const POOL_SYMBOLS: u32 = 18;
pub const POOL_FULL: u32 = POOL_DIGITS + POOL_LOWERCASE + POOL_UPPERCASE + POOL_SYMBOLS;

/// Inputs to the entropy bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntropyParams {
    /// Size of the character pool each unknown position draws from.
    pub alpha: u32,
    /// Passphrase length in characters.
    pub c: u32,
    /// How many characters the attacker already knows.
    pub n: u32,
}

impl EntropyParams {
    pub fn new(alpha: u32, c: u32, n: u32) -> Result<Self, StrengthError> {
        if alpha < 1 || c < 1 || n >= c {
            return Err(StrengthError::InvalidParams { alpha, c, n });
        }
        Ok(EntropyParams { alpha, c, n })
    }
}

/// Best-case attacker entropy: `(c - n) * log2(alpha)` bits.
pub fn entropy_bits(params: EntropyParams) -> f64 {
    f64::from(params.c - params.n) * f64::from(params.alpha).log2()
}

/// Convenience wrapper validating and computing in one step.
pub fn entropy_bits_for(alpha: u32, c: u32, n: u32) -> Result<f64, StrengthError> {
    Ok(entropy_bits(EntropyParams::new(alpha, c, n)?))
}

/// Exact candidate count `alpha^c`, arbitrary precision — `80^8` already
/// overflows u32 arithmetic done naively, and larger pools/lengths grow
/// past u128.
pub fn keyspace_count(alpha: u32, c: u32) -> Result<BigUint, StrengthError> {
    if alpha < 1 || c < 1 {
        return Err(StrengthError::InvalidParams { alpha, c, n: 0 });
    }
    Ok(BigUint::from(alpha).pow(c))
}

/// Sum of per-position bits for mixed-composition shapes, e.g. an ID
/// whose first position is one of 52 case-sensitive letters followed by
/// 7 digits. (A frequent miscount treats the letter pool as 54; there
/// are 26 * 2 = 52.)
pub fn mixed_pool_bits(pools: &[u32]) -> Result<f64, StrengthError> {
    let mut bits = 0.0;
    for &pool in pools {
        if pool < 1 {
            return Err(StrengthError::InvalidParams {
                alpha: pool,
                c: 1,
                n: 0,
            });
        }
        bits += f64::from(pool).log2();
    }
    Ok(bits)
}

/// Infer the pool size from which characters are present: digits,
/// lowercase, uppercase and symbols contribute their pools additively.
pub fn infer_alpha(passphrase: &str) -> u32 {
    let mut digits = false;
    let mut lower = false;
    let mut upper = false;
    let mut symbols = false;
    for c in passphrase.chars() {
        if c.is_ascii_digit() {
            digits = true;
        } else if c.is_ascii_lowercase() {
            lower = true;
        } else if c.is_ascii_uppercase() {
            upper = true;
        } else {
            symbols = true;
        }
    }
    let mut alpha = 0;
    if digits {
        alpha += POOL_DIGITS;
    }
    if lower {
        alpha += POOL_LOWERCASE;
    }
    if upper {
        alpha += POOL_UPPERCASE;
    }
    if symbols {
        alpha += POOL_SYMBOLS;
    }
    alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_unknown_digits() {
        let bits = entropy_bits_for(10, 8, 0).unwrap();
        assert!((bits - 26.58).abs() < 0.01, "got {bits}");
    }

    #[test]
    fn four_known_digits_halve_it() {
        let bits = entropy_bits_for(10, 8, 4).unwrap();
        assert!((bits - 13.29).abs() < 0.01, "got {bits}");
    }

    #[test]
    fn one_binary_character() {
        assert_eq!(entropy_bits_for(2, 1, 0).unwrap(), 1.0);
    }

    #[test]
    fn each_known_character_removes_log2_alpha() {
        let alpha = 42;
        let step = f64::from(alpha).log2();
        for n in 0..7 {
            let here = entropy_bits_for(alpha, 8, n).unwrap();
            let next = entropy_bits_for(alpha, 8, n + 1).unwrap();
            assert!((here - next - step).abs() < 1e-9);
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(EntropyParams::new(0, 8, 0).is_err());
        assert!(EntropyParams::new(10, 0, 0).is_err());
        assert!(EntropyParams::new(10, 8, 8).is_err());
        assert!(EntropyParams::new(10, 8, 7).is_ok());
    }

    #[test]
    fn full_pool_eight_chars_exact_count() {
        let count = keyspace_count(80, 8).unwrap();
        assert_eq!(count.to_string(), "1677721600000000");
    }

    #[test]
    fn digit_count_and_degenerate_pool() {
        assert_eq!(keyspace_count(10, 8).unwrap().to_string(), "100000000");
        assert_eq!(keyspace_count(1, 999).unwrap(), BigUint::from(1u8));
        assert!(keyspace_count(0, 8).is_err());
    }

    #[test]
    fn count_and_bits_agree() {
        // 2^entropy_bits == keyspace_count, up to float precision.
        let bits = entropy_bits_for(80, 8, 0).unwrap();
        let count = keyspace_count(80, 8).unwrap();
        let approx = 2f64.powf(bits);
        let exact = 1_677_721_600_000_000f64;
        assert_eq!(count, BigUint::from(1_677_721_600_000_000u64));
        assert!((approx - exact).abs() / exact < 1e-9);
    }

    #[test]
    fn id_shaped_mixed_pool() {
        // One of 52 letters then 7 digits.
        let pools = [52, 10, 10, 10, 10, 10, 10, 10];
        let bits = mixed_pool_bits(&pools).unwrap();
        assert!((bits - 28.9539).abs() < 0.001, "got {bits}");
    }

    #[test]
    fn alpha_inference() {
        assert_eq!(infer_alpha("12345678"), 10);
        assert_eq!(infer_alpha("password"), 26);
        assert_eq!(infer_alpha("Password"), 52);
        assert_eq!(infer_alpha("Password1"), 62);
        assert_eq!(infer_alpha("Password1!"), 80);
        assert_eq!(infer_alpha(""), 0);
    }
}
