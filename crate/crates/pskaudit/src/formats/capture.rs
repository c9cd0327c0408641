//! PMKID capture-line parsing and serialization.
//!
//! Two line shapes are accepted, matching what capture tooling has emitted
//! over the years:
//!
//! - legacy, 4 fields:  `PMKID*MAC_AP*MAC_STA*ESSID_HEX`
//! - modern, 9 fields:  `WPA*01*PMKID*MAC_AP*MAC_STA*ESSID_HEX***`
//!   (the three trailing fields are unused by PMKID records and left empty)
//!
//! Hex is case-insensitive on input; serialization always emits the modern
//! form in lowercase, so `serialize(parse(x)) == x` holds for any
//! normalized line.

use super::{FormatError, HashTarget};
use crate::crypto::{Essid, MacAddress, Pmkid};

/// Parse one capture line. `line_no` is 1-based and only used in errors.
pub fn parse_pmkid_line(line: &str, line_no: usize) -> Result<HashTarget, FormatError> {
    let line = line.trim_end_matches(['\r', '\n']);
    let fields: Vec<&str> = line.split('*').collect();

    let (pmkid_f, mac_ap_f, mac_sta_f, essid_f) = match fields.len() {
        4 => (fields[0], fields[1], fields[2], fields[3]),
        9 => {
            if !fields[0].eq_ignore_ascii_case("WPA") || fields[1] != "01" {
                return Err(FormatError::UnsupportedRecordType {
                    line: line_no,
                    tag: format!("{}*{}", fields[0], fields[1]),
                });
            }
            (fields[2], fields[3], fields[4], fields[5])
        }
        got => return Err(FormatError::FieldCount { line: line_no, got }),
    };

    let pmkid = fixed_hex::<16>(pmkid_f, "PMKID", "32", line_no)?;
    let mac_ap = fixed_hex::<6>(mac_ap_f, "AP MAC", "12", line_no)?;
    let mac_sta = fixed_hex::<6>(mac_sta_f, "station MAC", "12", line_no)?;

    if essid_f.len() % 2 != 0 || essid_f.len() > 64 {
        return Err(FormatError::FieldLength {
            line: line_no,
            field: "ESSID",
            expected: "an even count of at most 64",
            got: essid_f.len(),
        });
    }
    let essid_bytes = hex::decode(essid_f).map_err(|_| FormatError::HexDecode {
        line: line_no,
        field: "ESSID",
    })?;
    let essid = Essid::from_bytes(&essid_bytes).expect("length checked above");

    Ok(HashTarget {
        pmkid: Pmkid::from_bytes(pmkid),
        mac_ap: MacAddress::new(mac_ap),
        mac_sta: MacAddress::new(mac_sta),
        essid,
        source_line: line_no,
    })
}

fn fixed_hex<const N: usize>(
    field: &str,
    name: &'static str,
    expected: &'static str,
    line_no: usize,
) -> Result<[u8; N], FormatError> {
    if field.len() != N * 2 {
        return Err(FormatError::FieldLength {
            line: line_no,
            field: name,
            expected,
            got: field.len(),
        });
    }
    let bytes = hex::decode(field).map_err(|_| FormatError::HexDecode {
        line: line_no,
        field: name,
    })?;
    let mut out = [0u8; N];
    out.copy_from_slice(&bytes);
    Ok(out)
}

/// Emit the modern 9-field form, all hex lowercase.
pub fn serialize_pmkid_line(target: &HashTarget) -> String {
    format!(
        "WPA*01*{}*{}*{}*{}***",
        target.pmkid,
        target.mac_ap.to_hex(),
        target.mac_sta.to_hex(),
        hex::encode(target.essid.as_bytes()),
    )
}

/// Result of parsing a whole capture file: good targets plus the errors
/// for every bad line, so callers can choose lenient or strict handling.
#[derive(Debug, Default)]
pub struct CaptureParse {
    pub targets: Vec<HashTarget>,
    pub errors: Vec<FormatError>,
}

/// Parse every non-blank line of `text`. Blank lines and `#` comments are
/// skipped without note; anything else either parses or lands in `errors`.
pub fn parse_capture_lines(text: &str) -> CaptureParse {
    let mut out = CaptureParse::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_pmkid_line(raw, idx + 1) {
            Ok(target) => out.targets.push(target),
            Err(err) => out.errors.push(err),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEGACY: &str =
        "f0e1d2c3b4a5968778695a4b3c2d1e0f*aabbccddeeff*112233445566*546573744150";
    const MODERN: &str =
        "WPA*01*f0e1d2c3b4a5968778695a4b3c2d1e0f*aabbccddeeff*112233445566*546573744150***";

    #[test]
    fn parses_legacy_form() {
        let t = parse_pmkid_line(LEGACY, 1).unwrap();
        assert_eq!(t.pmkid.to_string(), "f0e1d2c3b4a5968778695a4b3c2d1e0f");
        assert_eq!(t.mac_ap.to_hex(), "aabbccddeeff");
        assert_eq!(t.mac_sta.to_hex(), "112233445566");
        assert_eq!(t.essid.as_bytes(), b"TestAP");
        assert_eq!(t.source_line, 1);
    }

    #[test]
    fn parses_modern_form() {
        let t = parse_pmkid_line(MODERN, 7).unwrap();
        assert_eq!(t.essid.as_bytes(), b"TestAP");
        assert_eq!(t.source_line, 7);
    }

    #[test]
    fn both_forms_agree() {
        let a = parse_pmkid_line(LEGACY, 1).unwrap();
        let b = parse_pmkid_line(MODERN, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn serializes_to_modern_form() {
        let t = parse_pmkid_line(LEGACY, 1).unwrap();
        assert_eq!(serialize_pmkid_line(&t), MODERN);
    }

    #[test]
    fn round_trip_is_identity_on_normalized_lines() {
        let t = parse_pmkid_line(MODERN, 3).unwrap();
        let reparsed = parse_pmkid_line(&serialize_pmkid_line(&t), 3).unwrap();
        assert_eq!(t, reparsed);
    }

    #[test]
    fn uppercase_hex_accepted_and_normalized() {
        let t = parse_pmkid_line(&LEGACY.to_uppercase(), 1).unwrap();
        assert_eq!(serialize_pmkid_line(&t), MODERN);
    }

    #[test]
    fn empty_essid_allowed() {
        let t = parse_pmkid_line("f0e1d2c3b4a5968778695a4b3c2d1e0f*aabbccddeeff*112233445566*", 1)
            .unwrap();
        assert!(t.essid.as_bytes().is_empty());
    }

    #[test]
    fn three_fields_is_a_field_count_error() {
        let err = parse_pmkid_line("aa*bb*cc", 5).unwrap_err();
        assert_eq!(err, FormatError::FieldCount { line: 5, got: 3 });
    }

    #[test]
    fn eapol_record_type_is_rejected() {
        let line = MODERN.replace("WPA*01", "WPA*02");
        let err = parse_pmkid_line(&line, 2).unwrap_err();
        assert!(matches!(err, FormatError::UnsupportedRecordType { line: 2, .. }));
    }

    #[test]
    fn bad_hex_and_bad_lengths_are_typed() {
        let short_pmkid = "f0e1*aabbccddeeff*112233445566*";
        assert!(matches!(
            parse_pmkid_line(short_pmkid, 1).unwrap_err(),
            FormatError::FieldLength { field: "PMKID", .. }
        ));
        let bad_hex = "zze1d2c3b4a5968778695a4b3c2d1e0f*aabbccddeeff*112233445566*";
        assert!(matches!(
            parse_pmkid_line(bad_hex, 1).unwrap_err(),
            FormatError::HexDecode { field: "PMKID", .. }
        ));
        let odd_essid = "f0e1d2c3b4a5968778695a4b3c2d1e0f*aabbccddeeff*112233445566*414";
        assert!(matches!(
            parse_pmkid_line(odd_essid, 1).unwrap_err(),
            FormatError::FieldLength { field: "ESSID", .. }
        ));
    }

    #[test]
    fn file_parse_isolates_bad_lines() {
        let text = format!("{LEGACY}\n\nnot a capture line\n# comment\n{MODERN}\n");
        let parsed = parse_capture_lines(&text);
        assert_eq!(parsed.targets.len(), 2);
        assert_eq!(parsed.errors.len(), 1);
        assert_eq!(parsed.targets[0].source_line, 1);
        assert_eq!(parsed.targets[1].source_line, 5);
    }

    #[test]
    fn crlf_lines_parse() {
        let text = format!("{LEGACY}\r\n{MODERN}\r\n");
        let parsed = parse_capture_lines(&text);
        assert_eq!(parsed.targets.len(), 2);
        assert!(parsed.errors.is_empty());
    }
}
