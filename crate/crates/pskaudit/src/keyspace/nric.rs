//! National ID (NRIC) keyspaces.
//!
//! An NRIC is 9 characters: a prefix letter (S, T, F or G), 7 digits,
//! and a checksum letter. The checksum is a weighted sum of the digits
//! (weights 2,7,6,5,4,3,2) plus a prefix-dependent offset, reduced
//! modulo 11 and mapped through a prefix-family letter row — so the
//! whole 9-character ID carries only 7 digits of real freedom, and a
//! full sweep over one prefix is just 10^7 candidates.
//!
//! Three passphrase shapes are generated: the first 8 characters
//! (prefix + digits), the last 8 (digits + checksum), or the full 9.

use super::{pow10, Keyspace, KeyspaceError, KeyspaceKind};

const DIGIT_COUNT: usize = 7;
const WEIGHTS: [u32; 7] = [2, 7, 6, 5, 4, 3, 2];
/// Checksum letter rows indexed by the mod-11 remainder; the two prefix
/// families use disjoint letter sets.
const ST_ROW: [char; 11] = ['J', 'Z', 'I', 'H', 'G', 'F', 'E', 'D', 'C', 'B', 'A'];
const FG_ROW: [char; 11] = ['X', 'W', 'U', 'T', 'R', 'Q', 'P', 'N', 'M', 'L', 'K'];
/// Canonical prefix order used for enumeration.
const PREFIX_ORDER: [char; 4] = ['S', 'T', 'F', 'G'];

fn offset_of(prefix: char) -> Result<u32, KeyspaceError> {
    match prefix {
        'S' | 'F' => Ok(0),
        'T' | 'G' => Ok(4),
        other => Err(KeyspaceError::InvalidNricPrefix(other)),
    }
}

fn row_of(prefix: char) -> &'static [char; 11] {
    match prefix {
        'S' | 'T' => &ST_ROW,
        _ => &FG_ROW,
    }
}

/// Compute the checksum letter for a prefix and 7 digits.
/// Prefix is case-insensitive; the returned letter is uppercase.
pub fn checksum_letter(prefix: char, digits: &[u8; 7]) -> Result<char, KeyspaceError> {
    let prefix = prefix.to_ascii_uppercase();
    let offset = offset_of(prefix)?;
    let weighted: u32 = digits
        .iter()
        .zip(WEIGHTS)
        .map(|(d, w)| u32::from(*d) * w)
        .sum();
    let remainder = (weighted + offset) % 11;
    Ok(row_of(prefix)[remainder as usize])
}

/// A structurally valid NRIC: prefix, digits, and matching checksum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NricNumber {
    pub prefix: char,
    pub digits: [u8; 7],
    pub checksum: char,
}

impl NricNumber {
    /// Build from prefix and digits, computing the checksum.
    pub fn new(prefix: char, digits: [u8; 7]) -> Result<Self, KeyspaceError> {
        let prefix = prefix.to_ascii_uppercase();
        let checksum = checksum_letter(prefix, &digits)?;
        Ok(NricNumber {
            prefix,
            digits,
            checksum,
        })
    }

    /// Parse a 9-character ID, verifying the checksum. Case-insensitive;
    /// the parsed value is normalized to uppercase.
    pub fn parse(text: &str) -> Option<Self> {
        let bytes = text.as_bytes();
        if bytes.len() != 9 {
            return None;
        }
        let prefix = (bytes[0] as char).to_ascii_uppercase();
        let mut digits = [0u8; 7];
        for (i, b) in bytes[1..8].iter().enumerate() {
            if !b.is_ascii_digit() {
                return None;
            }
            digits[i] = b - b'0';
        }
        let claimed = (bytes[8] as char).to_ascii_uppercase();
        let expected = checksum_letter(prefix, &digits).ok()?;
        (claimed == expected).then_some(NricNumber {
            prefix,
            digits,
            checksum: expected,
        })
    }
}

impl std::fmt::Display for NricNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.prefix)?;
        for d in self.digits {
            write!(f, "{d}")?;
        }
        write!(f, "{}", self.checksum)
    }
}

/// `true` iff `text` is a full 9-character ID with a valid checksum.
pub fn is_valid_nric(text: &str) -> bool {
    NricNumber::parse(text).is_some()
}

/// `true` iff `text` has the prefix-first 8-character shape:
/// an S/T/F/G letter followed by 7 digits (checksum dropped).
pub fn matches_prefix_first8(text: &str) -> bool {
    let bytes = text.as_bytes();
    bytes.len() == 8
        && PREFIX_ORDER.contains(&(bytes[0] as char).to_ascii_uppercase())
        && bytes[1..].iter().all(u8::is_ascii_digit)
}

/// `true` iff `text` has the checksum-last 8-character shape: 7 digits
/// plus a letter that is the valid checksum for at least one prefix.
pub fn matches_checksum_last8(text: &str) -> bool {
    let bytes = text.as_bytes();
    if bytes.len() != 8 || !bytes[..7].iter().all(u8::is_ascii_digit) {
        return false;
    }
    let mut digits = [0u8; 7];
    for (i, b) in bytes[..7].iter().enumerate() {
        digits[i] = b - b'0';
    }
    let letter = (bytes[7] as char).to_ascii_uppercase();
    PREFIX_ORDER
        .iter()
        .any(|p| checksum_letter(*p, &digits) == Ok(letter))
}

/// Which 8- or 9-character slice of the ID becomes the candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NricForm {
    /// Prefix letter + 7 digits.
    PrefixFirst8,
    /// 7 digits + checksum letter.
    ChecksumLast8,
    /// The whole 9-character ID.
    Full9,
}

/// Whether to enumerate uppercase only or uppercase then lowercase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseMode {
    UpperOnly,
    BothCases,
}

#[derive(Debug, Clone, Copy)]
struct Variant {
    prefix: char,
    lowercase: bool,
}

/// All candidates of one form over a prefix set: for each (prefix, case)
/// variant in order, the 10^7 digit tuples ascending.
///
/// No two indices produce byte-identical candidates: within one variant
/// the digit tuple differs; across prefixes the checksum letter always
/// differs (the two family rows are disjoint letter sets, and the S/T
/// and F/G offsets differ by 4, which is nonzero mod 11); across cases
/// the letter casing differs.
#[derive(Debug, Clone)]
pub struct NricKeyspace {
    form: NricForm,
    variants: Vec<Variant>,
}

impl NricKeyspace {
    pub fn new(
        form: NricForm,
        prefixes: &[char],
        case_mode: CaseMode,
    ) -> Result<Self, KeyspaceError> {
        if prefixes.is_empty() {
            return Err(KeyspaceError::EmptyPrefixSet);
        }
        let mut chosen = Vec::new();
        for p in prefixes {
            let upper = p.to_ascii_uppercase();
            if !PREFIX_ORDER.contains(&upper) {
                return Err(KeyspaceError::InvalidNricPrefix(*p));
            }
            if !chosen.contains(&upper) {
                chosen.push(upper);
            }
        }
        // Canonical enumeration order regardless of argument order.
        chosen.sort_by_key(|p| PREFIX_ORDER.iter().position(|c| c == p).unwrap());

        let mut variants: Vec<Variant> = chosen
            .iter()
            .map(|&prefix| Variant {
                prefix,
                lowercase: false,
            })
            .collect();
        if case_mode == CaseMode::BothCases {
            variants.extend(chosen.iter().map(|&prefix| Variant {
                prefix,
                lowercase: true,
            }));
        }
        Ok(NricKeyspace { form, variants })
    }

    /// All four prefixes, uppercase, full 9-character form: the widest
    /// standard ID sweep at 4 * 10^7 candidates.
    pub fn full_sweep() -> Self {
        Self::new(NricForm::Full9, &PREFIX_ORDER, CaseMode::UpperOnly)
            .expect("constant arguments are valid")
    }

    pub fn into_keyspace(self) -> Keyspace {
        Keyspace::Nric(self)
    }

    pub fn form(&self) -> NricForm {
        self.form
    }

    pub fn kind(&self) -> KeyspaceKind {
        match self.form {
            NricForm::PrefixFirst8 => KeyspaceKind::NricPrefixFirst,
            NricForm::ChecksumLast8 => KeyspaceKind::NricChecksumLast,
            NricForm::Full9 => KeyspaceKind::NricFull,
        }
    }

    pub fn cardinality(&self) -> u128 {
        self.variants.len() as u128 * pow10(DIGIT_COUNT as u32)
    }

    pub fn candidate(&self, index: u128) -> Option<String> {
        let block = pow10(DIGIT_COUNT as u32);
        let variant = *self.variants.get(usize::try_from(index / block).ok()?)?;
        let tuple = (index % block) as u32;
        let mut digits = [0u8; 7];
        let mut rest = tuple;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % 10) as u8;
            rest /= 10;
        }
        let digit_text = format!("{tuple:07}");
        let case = |c: char| {
            if variant.lowercase {
                c.to_ascii_lowercase()
            } else {
                c
            }
        };
        Some(match self.form {
            NricForm::PrefixFirst8 => format!("{}{digit_text}", case(variant.prefix)),
            NricForm::ChecksumLast8 => {
                let check = checksum_letter(variant.prefix, &digits).expect("valid prefix");
                format!("{digit_text}{}", case(check))
            }
            NricForm::Full9 => {
                let check = checksum_letter(variant.prefix, &digits).expect("valid prefix");
                format!("{}{digit_text}{}", case(variant.prefix), case(check))
            }
        })
    }

    pub fn describe(&self) -> String {
        let form = match self.form {
            NricForm::PrefixFirst8 => "prefix-first8",
            NricForm::ChecksumLast8 => "checksum-last8",
            NricForm::Full9 => "full9",
        };
        let prefixes: String = self
            .variants
            .iter()
            .map(|v| {
                if v.lowercase {
                    v.prefix.to_ascii_lowercase()
                } else {
                    v.prefix
                }
            })
            .collect();
        format!("nric[{form} {prefixes}]")
    }
}
