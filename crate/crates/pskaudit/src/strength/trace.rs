//! Vector-space trace of a passphrase over the keyboard grid.
//!
//! Each character drops a numbered marker at its key's coordinates;
//! consecutive markers contribute their XY Euclidean displacement to the
//! path of whichever hand both fall under. A pair spanning the two
//! halves counts as a hand alternation instead (contributing to neither
//! path), and a z-change between layers counts as a shift transition.
//! The scalar score is mean per-step effort:
//!
//! ```text
//! score = (left_path + right_path
//!          + layer_cost * layer_transitions
//!          + cross_half_cost * cross_half_count) / (length - 1)
//! ```
//!
//! Tight same-hand sequences like `12345678` score low (little physical
//! travel); passphrases that roam the board, alternate hands and reach
//! for shift score high. Entropy is blind to ordering — `qwertyui` and
//! a random 8-letter string share 37.6 bits — so the trace is the
//! order-sensitive half of the strength story.

use super::layout::{Half, KeyPosition, KeyboardLayout};
use super::StrengthError;

/// One placed marker: where character number `sequence` landed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Marker {
    pub character: char,
    pub x: f64,
    pub y: f64,
    pub z: u8,
    /// 1-based position in the passphrase.
    pub sequence: usize,
    pub half: Half,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceResult {
    pub markers: Vec<Marker>,
    pub left_half_path_length: f64,
    pub right_half_path_length: f64,
    pub layer_transitions: usize,
    pub cross_half_count: usize,
    /// Vector sum of all consecutive (dx, dy, dz) displacements.
    pub total_vector: [f64; 3],
    pub score: f64,
}

/// Trace a passphrase over a layout.
pub fn trace_passphrase(
    passphrase: &str,
    layout: &KeyboardLayout,
) -> Result<TraceResult, StrengthError> {
    let mut markers = Vec::with_capacity(passphrase.chars().count());
    for (i, character) in passphrase.chars().enumerate() {
        let KeyPosition { x, y, z, half, .. } = layout
            .position(character)
            .ok_or(StrengthError::UnmappableCharacter(character))?;
        markers.push(Marker {
            character,
            x,
            y,
            z,
            sequence: i + 1,
            half,
        });
    }

    let mut left = 0.0;
    let mut right = 0.0;
    let mut layer_transitions = 0;
    let mut cross_half_count = 0;
    let mut total_vector = [0.0, 0.0, 0.0];

    for pair in markers.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let dz = f64::from(b.z) - f64::from(a.z);
        total_vector[0] += dx;
        total_vector[1] += dy;
        total_vector[2] += dz;
        if a.z != b.z {
            layer_transitions += 1;
        }
        let segment = (dx * dx + dy * dy).sqrt();
        match (a.half, b.half) {
            (Half::Left, Half::Left) => left += segment,
            (Half::Right, Half::Right) => right += segment,
            _ => cross_half_count += 1,
        }
    }

    let steps = markers.len().saturating_sub(1);
    let score = if steps == 0 {
        0.0
    } else {
        (left
            + right
            + layout.layer_cost * layer_transitions as f64
            + layout.cross_half_cost * cross_half_count as f64)
            / steps as f64
    };

    Ok(TraceResult {
        markers,
        left_half_path_length: left,
        right_half_path_length: right,
        layer_transitions,
        cross_half_count,
        total_vector,
        score,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qwerty() -> &'static KeyboardLayout {
        KeyboardLayout::qwerty()
    }

    fn trace(p: &str) -> TraceResult {
        trace_passphrase(p, qwerty()).unwrap()
    }

    #[test]
    fn repeated_key_has_zero_path() {
        let t = trace("aaaaaaaa");
        assert_eq!(t.left_half_path_length, 0.0);
        assert_eq!(t.right_half_path_length, 0.0);
        assert_eq!(t.layer_transitions, 0);
        assert_eq!(t.cross_half_count, 0);
        assert_eq!(t.score, 0.0);
    }

    #[test]
    fn adjacent_same_row_keys_are_one_unit_apart() {
        let t = trace("qw");
        assert!((t.left_half_path_length - 1.0).abs() < 1e-12);
        assert_eq!(t.right_half_path_length, 0.0);
    }

    #[test]
    fn worked_example_marker_sequence() {
        // The canonical weak passphrase: every marker position pinned.
        let t = trace("password1");
        let expect = [
            ('p', 10, 1, Half::Right),
            ('a', 1, 2, Half::Left),
            ('s', 2, 2, Half::Left),
            ('s', 2, 2, Half::Left),
            ('w', 2, 1, Half::Left),
            ('o', 9, 1, Half::Right),
            ('r', 4, 1, Half::Left),
            ('d', 3, 2, Half::Left),
            ('1', 1, 0, Half::Left),
        ];
        assert_eq!(t.markers.len(), expect.len());
        for (i, (m, (c, col, row, half))) in t.markers.iter().zip(expect).enumerate() {
            assert_eq!(m.character, c, "character at step {i}");
            assert_eq!(m.sequence, i + 1, "sequence number at step {i}");
            let pos = qwerty().position(c).unwrap();
            assert_eq!((pos.col, pos.row), (col, row), "cell of {c:?}");
            assert_eq!(m.half, half, "half of {c:?}");
            assert_eq!((m.x, m.y), (pos.x, pos.y));
            assert_eq!(m.z, 0, "all of password1 is unshifted");
        }
        // 's' receives markers 3 and 4 at the same cell.
        assert_eq!(t.markers[2].x, t.markers[3].x);
        assert_eq!(t.markers[2].y, t.markers[3].y);
        assert_eq!(t.layer_transitions, 0);
        // p->a, a->s..w same hand; w->o crosses, o->r crosses; r->d->1 left.
        assert_eq!(t.cross_half_count, 3);
    }

    #[test]
    fn digit_run_scores_weak_band() {
        let t = trace("12345678");
        // Four left-hand unit steps, two right-hand, one alternation.
        assert!((t.left_half_path_length - 4.0).abs() < 1e-12);
        assert!((t.right_half_path_length - 2.0).abs() < 1e-12);
        assert_eq!(t.cross_half_count, 1);
        assert_eq!(t.layer_transitions, 0);
        let expected = (4.0 + 2.0 + 1.5) / 7.0;
        assert!((t.score - expected).abs() < 1e-12, "score {}", t.score);
        assert!(t.score < 1.2);
    }

    #[test]
    fn home_row_run_matches_digit_run_shape() {
        let t = trace("qwertyui");
        let expected = (4.0 + 2.0 + 1.5) / 7.0;
        assert!((t.score - expected).abs() < 1e-12);
    }

    #[test]
    fn reversal_preserves_path_and_negates_total_vector() {
        for phrase in ["password1", "Tr0ub4dor&3", "zxcvbnm,./"] {
            let forward = trace(phrase);
            let reversed: String = phrase.chars().rev().collect();
            let backward = trace(&reversed);
            assert!(
                (forward.left_half_path_length - backward.left_half_path_length).abs() < 1e-9
            );
            assert!(
                (forward.right_half_path_length - backward.right_half_path_length).abs() < 1e-9
            );
            assert_eq!(forward.layer_transitions, backward.layer_transitions);
            assert_eq!(forward.cross_half_count, backward.cross_half_count);
            for axis in 0..3 {
                assert!(
                    (forward.total_vector[axis] + backward.total_vector[axis]).abs() < 1e-9
                );
            }
        }
    }

    #[test]
    fn appending_never_decreases_total_path() {
        let mut previous = 0.0;
        let phrase = "correcthorse";
        for end in 1..=phrase.len() {
            let t = trace(&phrase[..end]);
            let total = t.left_half_path_length + t.right_half_path_length;
            assert!(total >= previous - 1e-12, "shrank at prefix length {end}");
            previous = total;
        }
    }

    #[test]
    fn shift_transitions_are_counted() {
        // a -> A -> a: two layer changes, zero XY movement.
        let t = trace("aAa");
        assert_eq!(t.layer_transitions, 2);
        assert_eq!(t.left_half_path_length, 0.0);
        assert!((t.score - (2.0 * 2.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_character_and_empty_traces() {
        let t = trace("a");
        assert_eq!(t.markers.len(), 1);
        assert_eq!(t.score, 0.0);
        let t = trace("");
        assert!(t.markers.is_empty());
        assert_eq!(t.score, 0.0);
    }

    #[test]
    fn unmappable_character_is_reported() {
        assert_eq!(
            trace_passphrase("pässword", qwerty()).unwrap_err(),
            StrengthError::UnmappableCharacter('ä')
        );
    }
}
