//! Plant passphrases with known answers, then recover them: build three
//! self-consistent PMKID targets, search a stack of structured keyspaces
//! with the parallel engine, and print masked results with live progress.
//!
//! Run with: `cargo run --example crack_planted`

use pskaudit::classify::mask;
use pskaudit::crypto::{Essid, MacAddress};
use pskaudit::engine::{run, CrackJob, CrackTarget};
use pskaudit::formats::HashTarget;
use pskaudit::keyspace::{DateKeyspace, DefaultDictKeyspace, PhoneKeyspace};

fn planted(passphrase: &str, essid: &str, n: u8) -> anyhow::Result<CrackTarget> {
    let target = HashTarget::synthesize(
        passphrase,
        &Essid::from_text(essid)?,
        MacAddress::new([0x28, 0x6c, 0x07, 0, 0, n]),
        MacAddress::new([0xc8, 0x3a, 0x35, 0, 0, n]),
    )?;
    Ok(CrackTarget::Pmkid(target))
}

fn main() -> anyhow::Result<()> {
    // Three networks whose owners chose, respectively: a vendor default,
    // a mobile number, and a birthday. Each synthesized record carries a
    // real PMKID, so recovery below is genuine PBKDF2 work.
    let targets = vec![
        planted("25203738", "Home-5G", 1)?,
        planted("67598042", "CoffeeHouse", 2)?,
        planted("14021990", "FamilyWifi", 3)?,
    ];

    // Searched in order; cheap dictionaries first, then the structured
    // spaces. Narrow prefixes keep this demo in the seconds range.
    let keyspaces = vec![
        DefaultDictKeyspace::built_in().into_keyspace(),
        PhoneKeyspace::new(&["675980"])?.into_keyspace(),
        DateKeyspace::new(1988, 1992)?.into_keyspace(),
    ];
    for ks in &keyspaces {
        println!("keyspace: {} ({} candidates)", ks.describe(), ks.cardinality());
    }
    println!();

    let keyspace_count = keyspaces.len();
    let job = CrackJob::new(targets, keyspaces).with_workers(4);
    let results = run(&job, |progress| {
        println!(
            "  ... keyspace {}/{keyspace_count} ({}), {} tried",
            progress.keyspace_ordinal + 1,
            progress.keyspace_kind,
            progress.candidates_tried
        );
    })?;

    println!();
    for result in &results {
        let target = &job.targets[result.target_index];
        match &result.passphrase {
            Some(found) => println!(
                "{:<12} recovered: {} (index {} in {}, {} candidates, {:.1}/s)",
                target.essid().display_lossy(),
                mask(found)?,
                result.candidate_index.unwrap(),
                result.keyspace_kind.unwrap(),
                result.candidates_tried,
                result.throughput,
            ),
            None => println!("{:<12} not recovered", target.essid().display_lossy()),
        }
    }
    Ok(())
}
