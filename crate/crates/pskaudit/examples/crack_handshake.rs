//! Crack a 4-way handshake instead of a PMKID: reconstruct the MIC a
//! known passphrase produces over a captured EAPoL frame, hand the
//! material to the engine, and recover the passphrase from a wordlist
//! with mutation rules.
//!
//! Run with: `cargo run --example crack_handshake`

use pskaudit::crypto::{derive_pmk, expected_mic, Essid, HandshakeMaterial, KeyVersion, MacAddress};
use pskaudit::engine::{run_silent, CrackJob, CrackTarget};
use pskaudit::keyspace::{RuleSet, WordlistKeyspace};

fn main() -> anyhow::Result<()> {
    let essid = Essid::from_text("StarAdmin")?;
    let passphrase = "sunshine7"; // what we will pretend not to know

    // In the field these all come from the sniffed handshake: both MACs,
    // both nonces, the zeroed-MIC EAPoL frame, and the MIC itself.
    let mut material = HandshakeMaterial {
        ap_nonce: [0x3c; 32],
        sta_nonce: [0x5a; 32],
        mac_ap: MacAddress::parse("a0:21:b7:01:02:03")?,
        mac_sta: MacAddress::parse("f4:ec:38:0a:0b:0c")?,
        eapol_frame: vec![0x01, 0x03, 0x00, 0x75, 0x02, 0x01, 0x0a, 0x00, 0x00, 0x00],
        mic: [0u8; 16],
        key_version: KeyVersion::HmacSha1_128,
    };
    material.mic = expected_mic(&derive_pmk(passphrase, &essid)?, &material);
    println!("captured MIC : {}", hex::encode(material.mic));

    // A small wordlist plus the append-a-digit rule covers "sunshine7"
    // without it ever appearing verbatim in the list.
    let words = b"password\nsunshine\nwelcome1\niloveyou\nqwertyuiop\n";
    let keyspace = WordlistKeyspace::from_bytes(words, RuleSet::parse("append-digits").unwrap());
    println!(
        "wordlist     : {} candidates after rules ({} skipped as invalid)",
        keyspace.cardinality(),
        keyspace.skipped
    );

    let job = CrackJob::new(
        vec![CrackTarget::Handshake { material, essid }],
        vec![keyspace.into_keyspace()],
    )
    .with_workers(2);
    let result = &run_silent(&job)?[0];

    match &result.passphrase {
        Some(found) => println!(
            "recovered    : {found:?} at index {} after {} candidates",
            result.candidate_index.unwrap(),
            result.candidates_tried
        ),
        None => println!("recovered    : nothing — not in this keyspace"),
    }
    Ok(())
}
