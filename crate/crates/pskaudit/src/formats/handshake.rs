//! Explicit field file for 4-way-handshake material.
//!
//! Binary capture formats (pcap and friends) are out of scope; instead a
//! handshake is described by a small `key = value` text file, one field
//! per line, with `#` comments and blank lines ignored:
//!
//! ```text
//! essid       = TestAP            # network name, UTF-8 text
//! mac_ap      = 00:11:22:33:44:55
//! mac_sta     = 66:77:88:99:aa:bb
//! anonce      = <64 hex chars>    # AP nonce
//! snonce      = <64 hex chars>    # station nonce
//! eapol       = <hex>             # message-2 frame, MIC field zeroed
//! mic         = <32 hex chars>    # MIC stripped from that frame
//! key_version = 2                 # 1 = HMAC-MD5, 2 = HMAC-SHA1-128
//! ```
//!
//! All eight keys are required; order does not matter; duplicates are
//! errors. This is the file `crack --handshake` consumes.

use super::FormatError;
use crate::crypto::{Essid, HandshakeMaterial, KeyVersion, MacAddress};
use std::collections::HashMap;

/// Parse a handshake field file into the material plus its network name.
pub fn parse_handshake_record(text: &str) -> Result<(HandshakeMaterial, Essid), FormatError> {
    const KEYS: [&str; 8] = [
        "essid",
        "mac_ap",
        "mac_sta",
        "anonce",
        "snonce",
        "eapol",
        "mic",
        "key_version",
    ];
    let mut seen: HashMap<&'static str, (usize, String)> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or(FormatError::MalformedRecordLine { line: line_no })?;
        let key = key.trim();
        let value = value.trim().to_string();
        let known = KEYS
            .iter()
            .find(|k| **k == key)
            .copied()
            .ok_or_else(|| FormatError::UnknownKey {
                line: line_no,
                key: key.to_string(),
            })?;
        if seen.insert(known, (line_no, value)).is_some() {
            return Err(FormatError::DuplicateKey {
                line: line_no,
                key: known,
            });
        }
    }

    let mut get = |key: &'static str| -> Result<(usize, String), FormatError> {
        seen.remove(key).ok_or(FormatError::MissingKey(key))
    };

    let (line, essid_text) = get("essid")?;
    let essid = Essid::from_text(&essid_text)
        .map_err(|source| FormatError::Field { line, source })?;
    let (line, v) = get("mac_ap")?;
    let mac_ap =
        MacAddress::parse(&v).map_err(|source| FormatError::Field { line, source })?;
    let (line, v) = get("mac_sta")?;
    let mac_sta =
        MacAddress::parse(&v).map_err(|source| FormatError::Field { line, source })?;
    let ap_nonce = nonce_field(get("anonce")?, "anonce")?;
    let sta_nonce = nonce_field(get("snonce")?, "snonce")?;

    let (line, v) = get("eapol")?;
    let eapol_frame = hex::decode(v.as_str()).map_err(|_| FormatError::HexDecode {
        line,
        field: "eapol",
    })?;

    let (line, v) = get("mic")?;
    if v.len() != 32 {
        return Err(FormatError::FieldLength {
            line,
            field: "mic",
            expected: "32",
            got: v.len(),
        });
    }
    let mic_bytes = hex::decode(v.as_str()).map_err(|_| FormatError::HexDecode {
        line,
        field: "mic",
    })?;
    let mut mic = [0u8; 16];
    mic.copy_from_slice(&mic_bytes);

    let (line, v) = get("key_version")?;
    let key_version = v
        .parse::<u8>()
        .ok()
        .and_then(|n| KeyVersion::from_u8(n).ok())
        .ok_or(FormatError::Field {
            line,
            source: crate::crypto::CryptoError::UnsupportedKeyVersion(
                v.parse::<u8>().unwrap_or(0),
            ),
        })?;

    Ok((
        HandshakeMaterial {
            ap_nonce,
            sta_nonce,
            mac_ap,
            mac_sta,
            eapol_frame,
            mic,
            key_version,
        },
        essid,
    ))
}

fn nonce_field(
    (line, value): (usize, String),
    field: &'static str,
) -> Result<[u8; 32], FormatError> {
    if value.len() != 64 {
        return Err(FormatError::FieldLength {
            line,
            field,
            expected: "64",
            got: value.len(),
        });
    }
    let bytes =
        hex::decode(value.as_str()).map_err(|_| FormatError::HexDecode { line, field })?;
    let mut out = [0u8; 32];
    out.copy_from_slice(&bytes);
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Serialize material back to the field-file form (round-trips through
/// [`parse_handshake_record`]).
pub fn serialize_handshake_record(material: &HandshakeMaterial, essid: &Essid) -> String {
    format!(
        "essid = {}\nmac_ap = {}\nmac_sta = {}\nanonce = {}\nsnonce = {}\neapol = {}\nmic = {}\nkey_version = {}\n",
        essid.display_lossy(),
        material.mac_ap,
        material.mac_sta,
        hex::encode(material.ap_nonce),
        hex::encode(material.sta_nonce),
        hex::encode(&material.eapol_frame),
        hex::encode(material.mic),
        material.key_version.as_u8(),
    )
}

/// Read and parse a handshake field file from disk.
pub fn load_handshake_file(
    path: &std::path::Path,
) -> anyhow::Result<(HandshakeMaterial, Essid)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
    parse_handshake_record(&text).map_err(Into::into)
}
