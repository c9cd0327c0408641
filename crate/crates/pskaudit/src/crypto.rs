//! WPA2 key-derivation primitives.
//!
//! Two computations sit at the heart of a PSK audit:
//!
//! - the PMK: PBKDF2-HMAC-SHA1 over (passphrase, SSID), 4096 rounds,
//!   32-byte output, per IEEE 802.11i;
//! - the PMKID: HMAC-SHA1 keyed by the PMK over the fixed string
//!   `PMK Name` followed by the AP and station MAC addresses, truncated
//!   to 16 bytes (the length stored in capture files).
//!
//! A full 4-way-handshake check (PTK/KCK derivation plus MIC comparison)
//! is also provided for captures where no PMKID was emitted.
//!
//! Everything here is a pure function over immutable inputs; callers may
//! fan these out across worker threads freely.

use hmac::{Hmac, Mac};
use md5::Md5;
use sha1::Sha1;
use std::fmt;

use crate::formats::HashTarget;

type HmacSha1 = Hmac<Sha1>;
type HmacMd5 = Hmac<Md5>;

/// Fixed data prefix of the PMKID computation: exactly these 8 ASCII bytes,
/// one space, no terminator.
const PMK_NAME: &[u8; 8] = b"PMK Name";

/// PRF label for pairwise transient key expansion.
const PRF_LABEL: &[u8] = b"Pairwise key expansion";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CryptoError {
    #[error("passphrase must be 8-63 characters, got {0}")]
    PassphraseLength(usize),
    #[error("passphrase byte at position {0} is not printable ASCII")]
    NonAscii(usize),
    #[error("ESSID is {0} bytes, exceeds the 32-byte SSID limit")]
    EssidTooLong(usize),
    #[error("invalid MAC address `{0}`")]
    InvalidMac(String),
    #[error("unsupported EAPoL key version {0} (1 = HMAC-MD5, 2 = HMAC-SHA1-128)")]
    UnsupportedKeyVersion(u8),
    #[error("nonce must be 32 bytes, got {0}")]
    BadNonceLength(usize),
    #[error("MIC must be 16 bytes, got {0}")]
    BadMicLength(usize),
}

/// 32-byte Pairwise Master Key.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Pmk([u8; 32]);

impl Pmk {
    pub fn from_bytes(bytes: [u8; 32]) -> Self {
        Pmk(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }
}

impl fmt::Debug for Pmk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pmk({})", hex::encode(self.0))
    }
}

impl fmt::Display for Pmk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&hex::encode(self.0))
    }
}

/// 16-byte PMK identifier as carried in the RSN information element.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pmkid([u8; 16]);

impl Pmkid {
    pub fn from_bytes(bytes: [u8; 16]) -> Self {
        Pmkid(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }
}

impl fmt::Debug for Pmkid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pmkid({})", hex::encode(self.0))
    }
}

impl fmt::Display for Pmkid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&hex::encode(self.0))
    }
}

/// 6-byte IEEE 802 MAC address.
///
/// Accepts `aabbccddeeff`, `aa:bb:cc:dd:ee:ff` or `aa-bb-cc-dd-ee-ff` on
/// parse; displays as colon-separated lowercase pairs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MacAddress([u8; 6]);

impl MacAddress {
    pub fn new(octets: [u8; 6]) -> Self {
        MacAddress(octets)
    }

    pub fn octets(&self) -> &[u8; 6] {
        &self.0
    }

    /// First three octets, the organizationally unique identifier.
    pub fn oui(&self) -> [u8; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    /// 12 lowercase hex digits, no separators (capture-line form).
    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn parse(text: &str) -> Result<Self, CryptoError> {
        let bare: String = text.chars().filter(|c| *c != ':' && *c != '-').collect();
        if bare.len() != 12 {
            return Err(CryptoError::InvalidMac(text.to_string()));
        }
        let bytes = hex::decode(&bare).map_err(|_| CryptoError::InvalidMac(text.to_string()))?;
        let mut octets = [0u8; 6];
        octets.copy_from_slice(&bytes);
        Ok(MacAddress(octets))
    }
}

impl fmt::Display for MacAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:02x}:{:02x}:{:02x}:{:02x}:{:02x}:{:02x}",
            self.0[0], self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]
        )
    }
}

impl fmt::Debug for MacAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MacAddress({self})")
    }
}

impl std::str::FromStr for MacAddress {
    type Err = CryptoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MacAddress::parse(s)
    }
}

/// Network name, up to 32 raw bytes. SSIDs are arbitrary bytes on the air;
/// no UTF-8 assumption is made.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Essid(Vec<u8>);

impl Essid {
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CryptoError> {
        if bytes.len() > 32 {
            return Err(CryptoError::EssidTooLong(bytes.len()));
        }
        Ok(Essid(bytes.to_vec()))
    }

    pub fn from_text(text: &str) -> Result<Self, CryptoError> {
        Self::from_bytes(text.as_bytes())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lossy text form for display; undecodable bytes become U+FFFD.
    pub fn display_lossy(&self) -> String {
        String::from_utf8_lossy(&self.0).into_owned()
    }
}

impl fmt::Debug for Essid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Essid({:?})", self.display_lossy())
    }
}

/// EAPoL key descriptor version, which selects the MIC algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyVersion {
    /// Version 1: HMAC-MD5.
    HmacMd5,
    /// Version 2: HMAC-SHA1 truncated to 128 bits.
    HmacSha1_128,
}

impl KeyVersion {
    pub fn from_u8(value: u8) -> Result<Self, CryptoError> {
        match value {
            1 => Ok(KeyVersion::HmacMd5),
            2 => Ok(KeyVersion::HmacSha1_128),
            other => Err(CryptoError::UnsupportedKeyVersion(other)),
        }
    }

    pub fn as_u8(&self) -> u8 {
        match self {
            KeyVersion::HmacMd5 => 1,
            KeyVersion::HmacSha1_128 => 2,
        }
    }
}

/// Everything captured from a 4-way handshake that a candidate check needs.
///
/// `eapol_frame` must have its MIC field zeroed; `mic` holds the value
/// stripped from the frame.
#[derive(Debug, Clone)]
pub struct HandshakeMaterial {
    pub ap_nonce: [u8; 32],
    pub sta_nonce: [u8; 32],
    pub mac_ap: MacAddress,
    pub mac_sta: MacAddress,
    pub eapol_frame: Vec<u8>,
    pub mic: [u8; 16],
    pub key_version: KeyVersion,
}

/// Outcome of testing one candidate against a target.
///
/// `Skipped` marks candidates that failed the passphrase preconditions
/// (length or character set) and were therefore never hashed; the engine
/// counts these separately so audits over dirty wordlists still complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOutcome {
    Match,
    Mismatch,
    Skipped,
}

/// Derive the PMK for a candidate passphrase on a given network.
///
/// PBKDF2-HMAC-SHA1, 4096 iterations, 32-byte output, ESSID bytes as the
/// salt. Passphrases must be 8-63 printable-ASCII characters; anything
/// else is rejected rather than encoded.
pub fn derive_pmk(passphrase: &str, essid: &Essid) -> Result<Pmk, CryptoError> {
    validate_passphrase(passphrase)?;
    let mut pmk = [0u8; 32];
    pbkdf2::pbkdf2::<HmacSha1>(passphrase.as_bytes(), essid.as_bytes(), 4096, &mut pmk)
        .expect("HMAC accepts any key length");
    Ok(Pmk(pmk))
}

/// Check a passphrase against the 802.11i constraints without hashing it.
pub fn validate_passphrase(passphrase: &str) -> Result<(), CryptoError> {
    let bytes = passphrase.as_bytes();
    if bytes.len() < 8 || bytes.len() > 63 {
        return Err(CryptoError::PassphraseLength(bytes.len()));
    }
    for (i, b) in bytes.iter().enumerate() {
        if !(0x20..=0x7e).contains(b) {
            return Err(CryptoError::NonAscii(i));
        }
    }
    Ok(())
}

/// Compute the PMKID: first 16 bytes of
/// `HMAC-SHA1(PMK, "PMK Name" | MAC_AP | MAC_STA)`.
///
/// The AP MAC comes first, the station MAC second; no min/max reordering
/// happens here (that applies only to PTK derivation).
pub fn compute_pmkid(pmk: &Pmk, mac_ap: MacAddress, mac_sta: MacAddress) -> Pmkid {
    let mut mac =
        HmacSha1::new_from_slice(pmk.as_bytes()).expect("HMAC accepts any key length");
    let mut data = [0u8; 20];
    data[..8].copy_from_slice(PMK_NAME);
    data[8..14].copy_from_slice(mac_ap.octets());
    data[14..20].copy_from_slice(mac_sta.octets());
    mac.update(&data);
    let digest = mac.finalize().into_bytes();
    let mut out = [0u8; 16];
    out.copy_from_slice(&digest[..16]);
    Pmkid(out)
}

/// PMKID comparison for an already-derived PMK. Splitting this from
/// [`check_pmkid_candidate`] lets a search amortize one PBKDF2 (the
/// dominant cost) across every target sharing an ESSID; the per-target
/// HMAC here is ~10^4 times cheaper.
pub fn pmkid_matches(pmk: &Pmk, target: &HashTarget) -> bool {
    compute_pmkid(pmk, target.mac_ap, target.mac_sta) == target.pmkid
}

/// MIC comparison for an already-derived PMK.
pub fn handshake_matches(pmk: &Pmk, material: &HandshakeMaterial) -> bool {
    ct_eq16(&expected_mic(pmk, material), &material.mic)
}

/// The MIC a station holding `pmk` would emit over `material`'s EAPoL
/// frame (with the frame's MIC field already zeroed). The `mic` field
/// of `material` is ignored — use this to *build* planted handshake
/// fixtures, the way [`HashTarget::synthesize`] builds PMKID ones.
pub fn expected_mic(pmk: &Pmk, material: &HandshakeMaterial) -> [u8; 16] {
    let kck = derive_kck(pmk, material);
    compute_mic(&kck, &material.eapol_frame, material.key_version)
}

/// Test one candidate against a PMKID target.
pub fn check_pmkid_candidate(candidate: &str, target: &HashTarget) -> CandidateOutcome {
    let pmk = match derive_pmk(candidate, &target.essid) {
        Ok(pmk) => pmk,
        Err(_) => return CandidateOutcome::Skipped,
    };
    if pmkid_matches(&pmk, target) {
        CandidateOutcome::Match
    } else {
        CandidateOutcome::Mismatch
    }
}

/// `true` iff the candidate reproduces the target's PMKID. Invalid
/// candidates verify as `false`.
pub fn verify_pmkid_candidate(candidate: &str, target: &HashTarget) -> bool {
    check_pmkid_candidate(candidate, target) == CandidateOutcome::Match
}

/// Test one candidate against captured 4-way-handshake material.
pub fn check_handshake_candidate(
    candidate: &str,
    material: &HandshakeMaterial,
    essid: &Essid,
) -> CandidateOutcome {
    let pmk = match derive_pmk(candidate, essid) {
        Ok(pmk) => pmk,
        Err(_) => return CandidateOutcome::Skipped,
    };
    if handshake_matches(&pmk, material) {
        CandidateOutcome::Match
    } else {
        CandidateOutcome::Mismatch
    }
}

/// `true` iff the recomputed MIC equals the captured MIC.
pub fn verify_handshake_candidate(
    candidate: &str,
    material: &HandshakeMaterial,
    essid: &Essid,
) -> bool {
    check_handshake_candidate(candidate, material, essid) == CandidateOutcome::Match
}

/// Derive the KCK (first 16 bytes of the PTK) for handshake verification.
///
/// PTK = PRF-512(PMK, "Pairwise key expansion",
///               min(AA,SPA) | max(AA,SPA) | min(ANonce,SNonce) | max(ANonce,SNonce))
fn derive_kck(pmk: &Pmk, material: &HandshakeMaterial) -> [u8; 16] {
    let mut data = [0u8; 76];
    let (lo_mac, hi_mac) = if material.mac_ap.octets() <= material.mac_sta.octets() {
        (material.mac_ap, material.mac_sta)
    } else {
        (material.mac_sta, material.mac_ap)
    };
    data[..6].copy_from_slice(lo_mac.octets());
    data[6..12].copy_from_slice(hi_mac.octets());
    let (lo_nonce, hi_nonce) = if material.ap_nonce <= material.sta_nonce {
        (&material.ap_nonce, &material.sta_nonce)
    } else {
        (&material.sta_nonce, &material.ap_nonce)
    };
    data[12..44].copy_from_slice(lo_nonce);
    data[44..76].copy_from_slice(hi_nonce);

    let ptk = prf_512(pmk.as_bytes(), PRF_LABEL, &data);
    let mut kck = [0u8; 16];
    kck.copy_from_slice(&ptk[..16]);
    kck
}

/// 802.11 PRF: HMAC-SHA1(key, label | 0x00 | data | counter) concatenated
/// over counters 0..4, truncated to 64 bytes.
fn prf_512(key: &[u8], label: &[u8], data: &[u8]) -> [u8; 64] {
    let mut out = [0u8; 64];
    let mut input = Vec::with_capacity(label.len() + 1 + data.len() + 1);
    input.extend_from_slice(label);
    input.push(0);
    input.extend_from_slice(data);
    input.push(0);
    let counter_at = input.len() - 1;

    for i in 0..4u8 {
        input[counter_at] = i;
        let mut mac = HmacSha1::new_from_slice(key).expect("HMAC accepts any key length");
        mac.update(&input);
        let digest = mac.finalize().into_bytes();
        let start = i as usize * 20;
        let len = 20.min(64 - start);
        out[start..start + len].copy_from_slice(&digest[..len]);
    }
    out
}

fn compute_mic(kck: &[u8; 16], eapol_frame: &[u8], version: KeyVersion) -> [u8; 16] {
    let mut out = [0u8; 16];
    match version {
        KeyVersion::HmacMd5 => {
            let mut mac = HmacMd5::new_from_slice(kck).expect("HMAC accepts any key length");
            mac.update(eapol_frame);
            out.copy_from_slice(&mac.finalize().into_bytes());
        }
        KeyVersion::HmacSha1_128 => {
            let mut mac = HmacSha1::new_from_slice(kck).expect("HMAC accepts any key length");
            mac.update(eapol_frame);
            let digest = mac.finalize().into_bytes();
            out.copy_from_slice(&digest[..16]);
        }
    }
    out
}

fn ct_eq16(a: &[u8; 16], b: &[u8; 16]) -> bool {
    let mut diff = 0u8;
    for i in 0..16 {
        diff |= a[i] ^ b[i];
    }
    diff == 0
}
