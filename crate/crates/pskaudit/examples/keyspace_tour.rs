//! Tour every keyspace kind: build one of each, show its exact
//! cardinality, the first candidates it enumerates, and how it splits
//! into balanced worker ranges.
//!
//! Run with: `cargo run --example keyspace_tour`

use pskaudit::keyspace::{
    CaseMode, DateKeyspace, DefaultDictKeyspace, DigitsKeyspace, Keyspace, NricForm, NricKeyspace,
    PhoneKeyspace, RuleSet, WordlistKeyspace,
};

fn show(keyspace: &Keyspace) {
    println!("{} — {} candidates", keyspace.describe(), keyspace.cardinality());
    let preview: Vec<String> = (0..3).filter_map(|i| keyspace.candidate(i)).collect();
    let last = keyspace.candidate(keyspace.cardinality() - 1).unwrap();
    println!("  first: {} ... last: {last}", preview.join(", "));
    if let Ok(ranges) = keyspace.split(4) {
        let spans: Vec<String> = ranges.iter().map(|(a, b)| format!("[{a}, {b})")).collect();
        println!("  split 4 ways: {}", spans.join(" "));
    }
    println!();
}

fn main() -> anyhow::Result<()> {
    // Local phone numbers: 8 digits, led by the four valid leading
    // digits. Knowing more of the prefix shrinks the space 10x per digit.
    show(&PhoneKeyspace::new(&["3", "6", "8", "9"])?.into_keyspace());
    show(&PhoneKeyspace::new(&["6759"])?.into_keyspace());

    // Raw digit strings, with prefix exclusions for ruling out ranges
    // already covered elsewhere.
    show(&DigitsKeyspace::new(8)?.into_keyspace());
    show(&DigitsKeyspace::with_excluded_prefixes(8, &["3", "6", "8", "9"])?.into_keyspace());

    // Calendar dates, day-month-year: tiny (about 366 per year) and
    // disproportionately common as passphrases.
    show(&DateKeyspace::new(1960, 2010)?.into_keyspace());

    // National ID numbers: a prefix letter, 7 digits, and a checksum
    // letter. The checksum makes the full 9-character space the same
    // size as the 8-character truncations — the last letter is implied.
    show(&NricKeyspace::new(NricForm::Full9, &['S', 'T'], CaseMode::UpperOnly)?.into_keyspace());
    show(
        &NricKeyspace::new(NricForm::PrefixFirst8, &['S'], CaseMode::UpperOnly)?.into_keyspace(),
    );
    show(
        &NricKeyspace::new(NricForm::ChecksumLast8, &['T'], CaseMode::UpperOnly)?.into_keyspace(),
    );

    // Vendor defaults ship with the router; always worth trying first.
    show(&DefaultDictKeyspace::built_in().into_keyspace());

    // Wordlists, optionally expanded by mutation rules.
    let words = b"password\nsunshine\nwelcome1\niloveyou\n";
    show(&WordlistKeyspace::from_bytes(words, RuleSet::none()).into_keyspace());
    show(&WordlistKeyspace::from_bytes(words, RuleSet::all()).into_keyspace());

    Ok(())
}
