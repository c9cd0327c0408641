//! The two on-disk formats end to end: PMKID capture lines (modern
//! 9-field and legacy 4-field, which normalize to the same record) and
//! the key-value handshake record file — plus what a malformed line
//! reports instead of crashing the batch.
//!
//! Run with: `cargo run --example capture_files`

use pskaudit::crypto::{Essid, KeyVersion, MacAddress};
use pskaudit::engine::CrackTarget;
use pskaudit::formats::{
    parse_capture_lines, parse_handshake_record, serialize_handshake_record, serialize_pmkid_line,
};

fn main() -> anyhow::Result<()> {
    // One modern line, one legacy line for the SAME network, a comment,
    // and two broken lines. Lenient parsing keeps the good records and
    // reports the rest with line numbers.
    let capture = "\
# survey 2026-08-23, block 675
WPA*01*8ad4cf96980f2eafe4b9b6b1e783435e*286c07aabb01*c83a3500110a*436f66666565486f757365***
8AD4CF96980F2EAFE4B9B6B1E783435E*286C07AABB01*C83A3500110A*436F66666565486F757365
WPA*02*8ad4cf96980f2eafe4b9b6b1e783435e*286c07aabb01*c83a3500110a*436f66666565486f757365***
not a capture line at all
";
    let parsed = parse_capture_lines(capture);
    println!("{} records, {} rejected lines", parsed.targets.len(), parsed.errors.len());
    for target in &parsed.targets {
        println!(
            "  line {}: {} / {} -> {}",
            target.source_line,
            target.essid.display_lossy(),
            target.mac_ap,
            target.pmkid
        );
    }
    for error in &parsed.errors {
        println!("  rejected: {error}");
    }

    // Modern and legacy forms of one record serialize identically.
    let (first, second) = (&parsed.targets[0], &parsed.targets[1]);
    assert_eq!(serialize_pmkid_line(first), serialize_pmkid_line(second));
    println!("\nlegacy line normalized to: {}", serialize_pmkid_line(second));

    // Handshake material travels as a key-value record, one field per
    // line, hex for the binary parts.
    let material = pskaudit::crypto::HandshakeMaterial {
        ap_nonce: [0x11; 32],
        sta_nonce: [0x22; 32],
        mac_ap: MacAddress::parse("28:6c:07:aa:bb:01")?,
        mac_sta: MacAddress::parse("c8:3a:35:00:11:0a")?,
        eapol_frame: vec![0x01, 0x03, 0x00, 0x5f, 0x02],
        mic: [0x33; 16],
        key_version: KeyVersion::HmacSha1_128,
    };
    let essid = Essid::from_text("CoffeeHouse")?;
    let record = serialize_handshake_record(&material, &essid);
    println!("\nhandshake record:\n{record}");

    let (reparsed, reparsed_essid) = parse_handshake_record(&record)?;
    let target = CrackTarget::Handshake {
        material: reparsed,
        essid: reparsed_essid,
    };
    println!("round-tripped target for {}", target.essid().display_lossy());
    Ok(())
}
