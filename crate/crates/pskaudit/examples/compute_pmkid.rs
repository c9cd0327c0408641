//! Derive a pairwise master key and its PMKID the way an access point
//! does, emit the capture-file line a sniffer would record, and verify
//! candidate passphrases against it — the core loop every crack run
//! repeats millions of times.
//!
//! Run with: `cargo run --example compute_pmkid`

use pskaudit::crypto::{
    compute_pmkid, derive_pmk, expected_mic, verify_pmkid_candidate, Essid, HandshakeMaterial,
    KeyVersion, MacAddress,
};
use pskaudit::formats::HashTarget;

fn main() -> anyhow::Result<()> {
    let essid = Essid::from_text("CoffeeHouse")?;
    let ap = MacAddress::parse("28:6c:07:11:22:33")?;
    let sta = MacAddress::parse("c8:3a:35:44:55:66")?;
    let passphrase = "67598123";

    // PMK = 4096 rounds of PBKDF2-HMAC-SHA1 over (passphrase, network
    // name). The PMKID then binds it to the two radio addresses. Both
    // values are derivable offline from a single sniffed frame.
    let pmk = derive_pmk(passphrase, &essid)?;
    let pmkid = compute_pmkid(&pmk, ap, sta);
    println!("ESSID        : {}", essid.display_lossy());
    println!("PMK          : {pmk}");
    println!("PMKID        : {pmkid}");

    let target = HashTarget {
        pmkid,
        mac_ap: ap,
        mac_sta: sta,
        essid: essid.clone(),
        source_line: 0,
    };
    println!("capture line : {}", target.to_line());

    println!();
    for candidate in ["12345678", "qwertyui", passphrase] {
        let verdict = if verify_pmkid_candidate(candidate, &target) {
            "MATCH"
        } else {
            "no match"
        };
        println!("candidate {candidate:>10} : {verdict}");
    }

    // The same PMK also authenticates the 4-way handshake: the MIC over
    // an EAPoL frame, keyed by the first 128 bits of the expanded PTK.
    let mut ap_nonce = [0u8; 32];
    let mut sta_nonce = [0u8; 32];
    for i in 0..32u8 {
        ap_nonce[i as usize] = i;
        sta_nonce[i as usize] = 0xff - i;
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
    println!();
    println!("handshake MIC, v2 (HMAC-SHA1): {}", hex::encode(expected_mic(&pmk, &material)));
    material.key_version = KeyVersion::HmacMd5;
    println!("handshake MIC, v1 (HMAC-MD5) : {}", hex::encode(expected_mic(&pmk, &material)));

    Ok(())
}
