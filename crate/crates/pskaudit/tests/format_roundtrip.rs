//! Property tests for the line formats: serialize/parse round-trips,
//! case-insensitive parsing, and no-panic behavior on arbitrary input.

use proptest::prelude::*;
use pskaudit::crypto::{Essid, HandshakeMaterial, KeyVersion, MacAddress, Pmkid};
use pskaudit::formats::{
    parse_capture_lines, parse_handshake_record, parse_pmkid_line, serialize_handshake_record,
    serialize_pmkid_line, HashTarget,
};

fn target(pmkid: [u8; 16], ap: [u8; 6], sta: [u8; 6], essid: &[u8]) -> HashTarget {
    HashTarget {
        pmkid: Pmkid::from_bytes(pmkid),
        mac_ap: MacAddress::new(ap),
        mac_sta: MacAddress::new(sta),
        essid: Essid::from_bytes(essid).unwrap(),
        source_line: 1,
    }
}

proptest! {
    #[test]
    fn modern_line_round_trips(
        pmkid in prop::array::uniform16(any::<u8>()),
        ap in prop::array::uniform6(any::<u8>()),
        sta in prop::array::uniform6(any::<u8>()),
        essid in prop::collection::vec(any::<u8>(), 0..=32),
    ) {
        let original = target(pmkid, ap, sta, &essid);
        let line = serialize_pmkid_line(&original);
        let parsed = parse_pmkid_line(&line, 1).unwrap();
        prop_assert_eq!(parsed, original);
    }

    #[test]
    fn legacy_line_parses_to_same_target_and_normalizes(
        pmkid in prop::array::uniform16(any::<u8>()),
        ap in prop::array::uniform6(any::<u8>()),
        sta in prop::array::uniform6(any::<u8>()),
        essid in prop::collection::vec(any::<u8>(), 0..=32),
        uppercase in any::<bool>(),
    ) {
        let expected = target(pmkid, ap, sta, &essid);
        let mut legacy = format!(
            "{}*{}*{}*{}",
            hex::encode(pmkid),
            hex::encode(ap),
            hex::encode(sta),
            hex::encode(&essid)
        );
        if uppercase {
            legacy = legacy.to_uppercase();
        }
        let parsed = parse_pmkid_line(&legacy, 1).unwrap();
        prop_assert_eq!(&parsed, &expected);
        // Serialization is canonical: modern form, lowercase hex.
        let normalized = serialize_pmkid_line(&parsed);
        prop_assert!(normalized.starts_with("WPA*01*"));
        prop_assert_eq!(parse_pmkid_line(&normalized, 1).unwrap(), expected);
    }

    #[test]
    fn arbitrary_bytes_never_panic_the_parser(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let text = String::from_utf8_lossy(&bytes);
        // Outcome may be Ok or Err; the property is simply no panic.
        let _ = parse_pmkid_line(&text, 1);
        let _ = parse_capture_lines(&text);
    }

    #[test]
    fn single_byte_mutations_parse_or_fail_typed(
        pmkid in prop::array::uniform16(any::<u8>()),
        ap in prop::array::uniform6(any::<u8>()),
        sta in prop::array::uniform6(any::<u8>()),
        position in any::<prop::sample::Index>(),
        replacement in any::<u8>(),
    ) {
        let line = serialize_pmkid_line(&target(pmkid, ap, sta, b"MutNet"));
        let mut bytes = line.into_bytes();
        let at = position.index(bytes.len());
        bytes[at] = replacement;
        let mutated = String::from_utf8_lossy(&bytes);
        let _ = parse_pmkid_line(&mutated, 1);
    }

    #[test]
    fn handshake_record_round_trips(
        essid_text in "[A-Za-z0-9_-]{1,30}",
        ap in prop::array::uniform6(any::<u8>()),
        sta in prop::array::uniform6(any::<u8>()),
        ap_nonce in prop::array::uniform32(any::<u8>()),
        sta_nonce in prop::array::uniform32(any::<u8>()),
        frame in prop::collection::vec(any::<u8>(), 1..150),
        mic in prop::array::uniform16(any::<u8>()),
        version in 1u8..=2,
    ) {
        let material = HandshakeMaterial {
            ap_nonce,
            sta_nonce,
            mac_ap: MacAddress::new(ap),
            mac_sta: MacAddress::new(sta),
            eapol_frame: frame,
            mic,
            key_version: KeyVersion::from_u8(version).unwrap(),
        };
        let essid = Essid::from_text(&essid_text).unwrap();
        let text = serialize_handshake_record(&material, &essid);
        let (parsed, parsed_essid) = parse_handshake_record(&text).unwrap();
        prop_assert_eq!(parsed_essid.as_bytes(), essid.as_bytes());
        prop_assert_eq!(parsed.ap_nonce, material.ap_nonce);
        prop_assert_eq!(parsed.sta_nonce, material.sta_nonce);
        prop_assert_eq!(parsed.mac_ap, material.mac_ap);
        prop_assert_eq!(parsed.mac_sta, material.mac_sta);
        prop_assert_eq!(parsed.eapol_frame, material.eapol_frame);
        prop_assert_eq!(parsed.mic, material.mic);
        prop_assert_eq!(parsed.key_version, material.key_version);
    }

    #[test]
    fn capture_parse_partitions_every_line(
        good_count in 0usize..5,
        garbage in prop::collection::vec("[^\\r\\n#]{0,40}", 0..5),
    ) {
        let mut text = String::new();
        let mut expected_good = 0;
        for i in 0..good_count {
            let t = target([i as u8; 16], [1; 6], [2; 6], b"Net");
            text.push_str(&serialize_pmkid_line(&t));
            text.push('\n');
            expected_good += 1;
        }
        let mut expected_bad = 0;
        for g in &garbage {
            text.push_str(g);
            text.push('\n');
            if !g.trim().is_empty() {
                // A random short line is overwhelmingly not a valid
                // record; treat accidental valid parses as good.
                if parse_pmkid_line(g, 1).is_ok() {
                    expected_good += 1;
                } else {
                    expected_bad += 1;
                }
            }
        }
        let parsed = parse_capture_lines(&text);
        prop_assert_eq!(parsed.targets.len(), expected_good);
        prop_assert_eq!(parsed.errors.len(), expected_bad);
    }
}
