//! Fixture helpers shared across the integration suites.

// Each test binary compiles this module separately and uses a different
// subset of it.
#![allow(dead_code)]

pub mod oracle;

use pskaudit::crypto::{expected_mic, derive_pmk, Essid, HandshakeMaterial, KeyVersion, MacAddress};
use pskaudit::engine::CrackTarget;
use pskaudit::formats::HashTarget;

pub fn essid(s: &str) -> Essid {
    Essid::from_text(s).unwrap()
}

pub fn mac(s: &str) -> MacAddress {
    MacAddress::parse(s).unwrap()
}

/// Deterministic distinct MAC pair for fixture target number `n`.
pub fn mac_pair(n: u8) -> (MacAddress, MacAddress) {
    (
        MacAddress::new([0x28, 0x6c, 0x07, 0x00, 0x00, n]),
        MacAddress::new([0xc8, 0x3a, 0x35, 0x00, 0x00, n]),
    )
}

/// Self-consistent PMKID target for a known passphrase.
pub fn plant(passphrase: &str, essid_text: &str, n: u8) -> HashTarget {
    let (ap, sta) = mac_pair(n);
    HashTarget::synthesize(passphrase, &essid(essid_text), ap, sta).unwrap()
}

/// Self-consistent handshake target for a known passphrase: fixed
/// nonces, a minimal zeroed-MIC EAPoL frame, and the MIC that
/// passphrase would produce over it.
pub fn plant_handshake(passphrase: &str, essid_text: &str, n: u8) -> CrackTarget {
    let (ap, sta) = mac_pair(n);
    let mut ap_nonce = [0u8; 32];
    let mut sta_nonce = [0u8; 32];
    for i in 0..32u8 {
        ap_nonce[i as usize] = i ^ n;
        sta_nonce[i as usize] = (64 + i) ^ n;
    }
    let mut material = HandshakeMaterial {
        ap_nonce,
        sta_nonce,
        mac_ap: ap,
        mac_sta: sta,
        eapol_frame: vec![0x01, 0x03, 0x00, 0x5f, 0x02, 0x01, 0x0a, 0x00],
        mic: [0u8; 16],
        key_version: KeyVersion::HmacSha1_128,
    };
    let network = essid(essid_text);
    let pmk = derive_pmk(passphrase, &network).unwrap();
    material.mic = expected_mic(&pmk, &material);
    CrackTarget::Handshake {
        material,
        essid: network,
    }
}
