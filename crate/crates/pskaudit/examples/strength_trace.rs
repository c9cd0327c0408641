//! Assess passphrase strength two ways at once: the entropy bound from
//! the inferred character pool, and the keyboard-trace score that
//! catches what entropy misses — `qwertyui` carries the same bits as a
//! random 8-letter string but almost no finger travel.
//!
//! Run with: `cargo run --example strength_trace`

use pskaudit::strength::{strength_report, trace_passphrase, KeyboardLayout};

fn main() -> anyhow::Result<()> {
    let layout = KeyboardLayout::qwerty();

    println!(
        "{:<14} {:>4} {:>5} {:>8} {:>20} {:>7}  band",
        "passphrase", "len", "pool", "bits", "keyspace", "score"
    );
    for passphrase in [
        "12345678",
        "qwertyui",
        "password1",
        "67598123",
        "Tr0ub4dor&3",
        "correct horse",
    ] {
        let report = strength_report(passphrase, layout)?;
        println!(
            "{passphrase:<14} {:>4} {:>5} {:>8.2} {:>20} {:>7.2}  {}",
            report.length,
            report.inferred_alpha,
            report.entropy_bits,
            report.keyspace_count,
            report.trace.score,
            report.band,
        );
    }

    // The trace itself: numbered markers dropped key by key, split into
    // per-hand path lengths plus hand alternations and shift reaches.
    println!();
    let trace = trace_passphrase("password1", layout)?;
    println!("trace of \"password1\":");
    for marker in &trace.markers {
        println!(
            "  {}. {:?} at ({:.1}, {:.1}) layer {} — {:?} hand",
            marker.sequence, marker.character, marker.x, marker.y, marker.z, marker.half
        );
    }
    println!(
        "left path {:.2}, right path {:.2}, {} hand alternations, {} shift transitions",
        trace.left_half_path_length,
        trace.right_half_path_length,
        trace.cross_half_count,
        trace.layer_transitions
    );
    println!("net displacement: {:?}", trace.total_vector);
    Ok(())
}
