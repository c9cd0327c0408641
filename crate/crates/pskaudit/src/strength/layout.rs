//! Two-layer keyboard grid with physical-ish geometry.
//!
//! Each printable ASCII character sits in exactly one cell across the
//! unshifted (z = 0) and shifted (z = 1) layers. A cell's x coordinate
//! is its raw column plus a per-row stagger offset approximating real
//! keyboard geometry; y is the row (0 = digit row, top-down; 4 = the
//! spacebar row); columns at or left of the half boundary belong to the
//! left hand.
//!
//! The grid, stagger offsets, transition costs and half boundary all
//! come from a layout file (see `data/qwerty.layout` for the format);
//! a built-in US QWERTY layout is the default.

use super::StrengthError;
use std::sync::OnceLock;

pub const PRINTABLE_ASCII_COUNT: usize = 95;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    Left,
    Right,
}

/// Where a character lives on the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyPosition {
    /// Staggered horizontal position (column + row stagger).
    pub x: f64,
    /// Row index as a coordinate.
    pub y: f64,
    /// Layer: 0 unshifted, 1 shifted.
    pub z: u8,
    /// Raw column before stagger.
    pub col: u8,
    pub row: u8,
    pub half: Half,
}

#[derive(Debug, Clone)]
pub struct KeyboardLayout {
    // Indexed by (byte - 0x20) for the 95 printable ASCII characters.
    positions: [Option<KeyPosition>; PRINTABLE_ASCII_COUNT],
    pub layer_cost: f64,
    pub cross_half_cost: f64,
    pub half_boundary: u8,
}

const QWERTY_SOURCE: &str = include_str!("../../data/qwerty.layout");
static QWERTY: OnceLock<KeyboardLayout> = OnceLock::new();

impl KeyboardLayout {
    /// The built-in US QWERTY layout.
    pub fn qwerty() -> &'static KeyboardLayout {
        QWERTY.get_or_init(|| {
            KeyboardLayout::parse(QWERTY_SOURCE).expect("built-in layout is valid")
        })
    }

    /// Position of a character, if it is on the grid.
    pub fn position(&self, c: char) -> Option<KeyPosition> {
        let byte = u32::from(c);
        if !(0x20..=0x7e).contains(&byte) {
            return None;
        }
        self.positions[(byte - 0x20) as usize]
    }

    /// Parse a layout file. Validates that every printable ASCII
    /// character appears in exactly one cell.
    pub fn parse(text: &str) -> Result<Self, StrengthError> {
        let mut stagger: Vec<f64> = vec![0.0, 0.5, 0.75, 1.25, 2.0];
        let mut layer_cost = 2.0;
        let mut cross_half_cost = 1.5;
        let mut half_boundary = 5u8;
        let mut cells: Vec<(char, Option<char>, u8, u8)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                StrengthError::MalformedLayoutLine {
                    line: line_no,
                    reason: "expected `key = value`".to_string(),
                }
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |reason: &str| StrengthError::MalformedLayoutLine {
                line: line_no,
                reason: reason.to_string(),
            };
            match key {
                "stagger" => {
                    stagger = value
                        .split(',')
                        .map(|t| t.trim().parse::<f64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad("stagger values must be numbers"))?;
                }
                "layer_cost" => {
                    layer_cost = value.parse().map_err(|_| bad("layer_cost must be a number"))?;
                }
                "cross_half_cost" => {
                    cross_half_cost = value
                        .parse()
                        .map_err(|_| bad("cross_half_cost must be a number"))?;
                }
                "half_boundary" => {
                    half_boundary = value
                        .parse()
                        .map_err(|_| bad("half_boundary must be a column index"))?;
                }
                "cell" => {
                    let tokens: Vec<&str> = value.split_whitespace().collect();
                    if tokens.len() != 4 {
                        return Err(bad("cell needs <unshifted> <shifted> <column> <row>"));
                    }
                    let unshifted = cell_char(tokens[0])
                        .ok_or_else(|| bad("bad unshifted character token"))?
                        .ok_or_else(|| bad("unshifted character cannot be `none`"))?;
                    let shifted =
                        cell_char(tokens[1]).ok_or_else(|| bad("bad shifted character token"))?;
                    let col: u8 = tokens[2].parse().map_err(|_| bad("bad column"))?;
                    let row: u8 = tokens[3].parse().map_err(|_| bad("bad row"))?;
                    cells.push((unshifted, shifted, col, row));
                }
                other => {
                    return Err(StrengthError::MalformedLayoutLine {
                        line: line_no,
                        reason: format!("unknown key `{other}`"),
                    })
                }
            }
        }

        let mut positions = [None; PRINTABLE_ASCII_COUNT];
        let mut place = |c: char, position: KeyPosition| -> Result<(), StrengthError> {
            let byte = u32::from(c);
            if !(0x20..=0x7e).contains(&byte) {
                return Err(StrengthError::LayoutCharacterSet {
                    detail: format!("character {c:?} is not printable ASCII"),
                });
            }
            let slot = &mut positions[(byte - 0x20) as usize];
            if slot.is_some() {
                return Err(StrengthError::LayoutCharacterSet {
                    detail: format!("character {c:?} appears in more than one cell"),
                });
            }
            *slot = Some(position);
            Ok(())
        };

        for (unshifted, shifted, col, row) in cells {
            let offset = stagger.get(row as usize).copied().unwrap_or(0.0);
            let half = if col <= half_boundary {
                Half::Left
            } else {
                Half::Right
            };
            let base = KeyPosition {
                x: f64::from(col) + offset,
                y: f64::from(row),
                z: 0,
                col,
                row,
                half,
            };
            place(unshifted, base)?;
            if let Some(shifted) = shifted {
                place(shifted, KeyPosition { z: 1, ..base })?;
            }
        }

        let missing: Vec<char> = (0x20u8..=0x7e)
            .filter(|b| positions[(b - 0x20) as usize].is_none())
            .map(char::from)
            .collect();
        if !missing.is_empty() {
            return Err(StrengthError::LayoutCharacterSet {
                detail: format!("{} characters missing, first: {:?}", missing.len(), missing[0]),
            });
        }

        Ok(KeyboardLayout {
            positions,
            layer_cost,
            cross_half_cost,
            half_boundary,
        })
    }
}

fn cell_char(token: &str) -> Option<Option<char>> {
    match token {
        "space" => Some(Some(' ')),
        "none" => Some(None),
        _ => {
            let mut chars = token.chars();
            let c = chars.next()?;
            chars.next().is_none().then_some(Some(c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_covers_all_printable_ascii() {
        let layout = KeyboardLayout::qwerty();
        for byte in 0x20u8..=0x7e {
            let c = char::from(byte);
            assert!(layout.position(c).is_some(), "missing {c:?}");
        }
        assert!(layout.position('\t').is_none());
        assert!(layout.position('é').is_none());
    }

    #[test]
    fn letter_positions_match_the_grid() {
        let layout = KeyboardLayout::qwerty();
        let q = layout.position('q').unwrap();
        assert_eq!((q.col, q.row, q.z), (1, 1, 0));
        assert_eq!(q.half, Half::Left);
        let p = layout.position('p').unwrap();
        assert_eq!((p.col, p.row, p.z), (10, 1, 0));
        assert_eq!(p.half, Half::Right);
        let one = layout.position('1').unwrap();
        assert_eq!((one.col, one.row, one.z), (1, 0, 0));
        let space = layout.position(' ').unwrap();
        assert_eq!((space.col, space.row), (5, 4));
    }

    #[test]
    fn shifted_layer_is_cell_aligned() {
        let layout = KeyboardLayout::qwerty();
        for (lower, upper) in [('a', 'A'), ('z', 'Z'), ('1', '!'), ('/', '?')] {
            let lo = layout.position(lower).unwrap();
            let hi = layout.position(upper).unwrap();
            assert_eq!(lo.x, hi.x);
            assert_eq!(lo.y, hi.y);
            assert_eq!(lo.z, 0);
            assert_eq!(hi.z, 1);
        }
    }

    #[test]
    fn stagger_shifts_x_by_row() {
        let layout = KeyboardLayout::qwerty();
        // Column 1 in each of the four finger rows.
        assert_eq!(layout.position('1').unwrap().x, 1.0);
        assert_eq!(layout.position('q').unwrap().x, 1.5);
        assert_eq!(layout.position('a').unwrap().x, 1.75);
        assert_eq!(layout.position('z').unwrap().x, 2.25);
    }

    #[test]
    fn half_split_follows_boundary() {
        let layout = KeyboardLayout::qwerty();
        assert_eq!(layout.position('t').unwrap().half, Half::Left);
        assert_eq!(layout.position('y').unwrap().half, Half::Right);
        assert_eq!(layout.position('g').unwrap().half, Half::Left);
        assert_eq!(layout.position('h').unwrap().half, Half::Right);
        assert_eq!(layout.position('b').unwrap().half, Half::Left);
        assert_eq!(layout.position('n').unwrap().half, Half::Right);
    }

    #[test]
    fn duplicate_character_rejected() {
        let text = "cell = a A 1 2\ncell = a B 2 2\n";
        assert!(matches!(
            KeyboardLayout::parse(text),
            Err(StrengthError::LayoutCharacterSet { .. })
        ));
    }

    #[test]
    fn incomplete_layout_rejected() {
        let text = "cell = a A 1 2\n";
        assert!(matches!(
            KeyboardLayout::parse(text),
            Err(StrengthError::LayoutCharacterSet { .. })
        ));
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let err = KeyboardLayout::parse("stagger = a,b\n").unwrap_err();
        assert!(matches!(
            err,
            StrengthError::MalformedLayoutLine { line: 1, .. }
        ));
        let err = KeyboardLayout::parse("cell = a A 1\n").unwrap_err();
        assert!(matches!(
            err,
            StrengthError::MalformedLayoutLine { line: 1, .. }
        ));
    }

    #[test]
    fn custom_constants_are_read() {
        // A tiny but complete layout is impractical to write by hand, so
        // tweak the real one's constants instead.
        let text = QWERTY_SOURCE
            .replace("layer_cost = 2.0", "layer_cost = 3.5")
            .replace("half_boundary = 5", "half_boundary = 4");
        let layout = KeyboardLayout::parse(&text).unwrap();
        assert_eq!(layout.layer_cost, 3.5);
        assert_eq!(layout.half_boundary, 4);
        // Moving the boundary flips 't' to the right hand.
        assert_eq!(layout.position('t').unwrap().half, Half::Right);
    }
}
