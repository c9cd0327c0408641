//! Attribute capture targets to router vendors through their AP MAC
//! prefixes: parse a capture, load an OUI table, and count targets per
//! vendor — the fastest way to spot a default-passphrase monoculture.
//!
//! Run with: `cargo run --example vendor_report`

use pskaudit::crypto::{Essid, MacAddress};
use pskaudit::formats::{parse_capture_lines, vendor_report, HashTarget, OuiTable};

fn main() -> anyhow::Result<()> {
    // Synthesize a few records (real PMKIDs, known passphrases) and
    // round-trip them through the capture format, as if read from disk.
    let mut capture = String::new();
    for (i, (ap, essid)) in [
        ("28:6c:07:aa:00:01", "Home-2.4G"),
        ("28:6c:07:aa:00:02", "Home-5G"),
        ("f4:ec:38:bb:00:03", "CoffeeHouse"),
        ("00:14:bf:cc:00:04", "BackOffice"),
        ("02:00:00:dd:00:05", "TestBench"),
    ]
    .iter()
    .enumerate()
    {
        let target = HashTarget::synthesize(
            "87654321",
            &Essid::from_text(essid)?,
            MacAddress::parse(ap)?,
            MacAddress::parse(&format!("c8:3a:35:00:11:{:02x}", i + 1))?,
        )?;
        capture.push_str(&target.to_line());
        capture.push('\n');
    }

    let parsed = parse_capture_lines(&capture);
    println!(
        "parsed {} targets, {} bad lines",
        parsed.targets.len(),
        parsed.errors.len()
    );

    let oui = OuiTable::load(&std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/oui-sample.tsv"
    ))?)?;
    println!("OUI table: {} prefixes", oui.len());

    println!();
    for target in &parsed.targets {
        println!(
            "{} ({:<12}) -> {}",
            target.mac_ap,
            target.essid.display_lossy(),
            oui.vendor_of(target.mac_ap)
        );
    }

    // Aggregated: how many crackable networks per vendor.
    println!();
    for (vendor, count) in vendor_report(&parsed.targets, &oui) {
        println!("{vendor:<28} {count}");
    }
    Ok(())
}
