//! Classify a batch of recovered passphrases into the six-way taxonomy,
//! print a masked report (raw secrets never leave the process), and
//! correlate phone-shaped ones with a prefix-to-region table.
//!
//! Run with: `cargo run --example classify_report`

use pskaudit::classify::{classify, distribution, geo_correlate, ClassifyContext};
use pskaudit::keyspace::PhonePrefixTable;

fn main() -> anyhow::Result<()> {
    // A plausible post-crack haul. In a real audit these come out of the
    // engine; the classifier only ever needs the strings themselves.
    let recovered = [
        "25203738",   // matches the vendor-default table
        "98917654",   // mobile number
        "65674123",   // fixed line, industrial-estate prefix
        "90110812",   // another mobile
        "14021990",   // a birthday
        "S1234567D",  // national ID
        "sunshine1",  // dictionary word plus a digit
        "iloveyou2",  // same shape
        "zxc visual", // none of the above
    ];

    let prefix_table = PhonePrefixTable::parse(&std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/phone-prefixes.tsv"
    ))?)?;
    let context = ClassifyContext::new()
        .with_dictionary(["sunshine", "iloveyou", "password"])
        .with_phone_prefixes(prefix_table.clone());

    let mut classified = Vec::new();
    println!("{:<12} {:<22} evidence", "masked", "label");
    for passphrase in recovered {
        let item = classify(passphrase, &context)?;
        println!("{:<12} {:<22} {}", item.masked, item.label, item.evidence);
        classified.push(item);
    }

    println!();
    let dist = distribution(&classified);
    for share in &dist.shares {
        if share.count > 0 {
            println!("{:<22} {:>2}  ({:>5.2}%)", share.label, share.count, share.percent);
        }
    }

    // Region correlation only sees phone-labeled entries; everything the
    // table does not cover lands in "unmapped".
    println!();
    for (region, count) in geo_correlate(&classified, &prefix_table) {
        println!("region {region:<20} {count}");
    }
    Ok(())
}
