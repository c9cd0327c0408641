//! Independent reference implementations of every hash primitive the
//! library's key-derivation chain uses, written directly from the
//! algorithm definitions (FIPS 180-1 SHA-1, RFC 1321 MD5, RFC 2104
//! HMAC, RFC 2898 PBKDF2) with no code shared with the crate under
//! test. The `crypto_oracle` suite pins these against published RFC
//! vectors, then uses them as the second route when checking the
//! library's PMK / PMKID / MIC outputs.

pub fn sha1(message: &[u8]) -> [u8; 20] {
    let mut h: [u32; 5] = [
        0x6745_2301,
        0xefcd_ab89,
        0x98ba_dcfe,
        0x1032_5476,
        0xc3d2_e1f0,
    ];
    for block in padded_blocks_be(message).chunks_exact(64) {
        let mut w = [0u32; 80];
        for (i, word) in block.chunks_exact(4).enumerate() {
            w[i] = u32::from_be_bytes(word.try_into().unwrap());
        }
        for i in 16..80 {
            w[i] = (w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16]).rotate_left(1);
        }
        let [mut a, mut b, mut c, mut d, mut e] = h;
        for (i, wi) in w.iter().enumerate() {
            let (f, k) = match i / 20 {
                0 => ((b & c) | (!b & d), 0x5a82_7999),
                1 => (b ^ c ^ d, 0x6ed9_eba1),
                2 => ((b & c) | (b & d) | (c & d), 0x8f1b_bcdc),
                _ => (b ^ c ^ d, 0xca62_c1d6),
            };
            let t = a
                .rotate_left(5)
                .wrapping_add(f)
                .wrapping_add(e)
                .wrapping_add(k)
                .wrapping_add(*wi);
            e = d;
            d = c;
            c = b.rotate_left(30);
            b = a;
            a = t;
        }
        for (slot, v) in h.iter_mut().zip([a, b, c, d, e]) {
            *slot = slot.wrapping_add(v);
        }
    }
    let mut out = [0u8; 20];
    for (chunk, word) in out.chunks_exact_mut(4).zip(h) {
        chunk.copy_from_slice(&word.to_be_bytes());
    }
    out
}

pub fn md5(message: &[u8]) -> [u8; 16] {
    // Per-round left-rotate amounts.
    const S: [u32; 64] = [
        7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, //
        5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, //
        4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, //
        6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21,
    ];
    // The sine-derived constant table is defined as
    // floor(2^32 * |sin(i+1)|); computing it beats transcribing 64
    // hex literals without a typo.
    let k: Vec<u32> = (0..64)
        .map(|i| ((i as f64 + 1.0).sin().abs() * 4_294_967_296.0) as u32)
        .collect();

    let mut h: [u32; 4] = [0x6745_2301, 0xefcd_ab89, 0x98ba_dcfe, 0x1032_5476];
    for block in padded_blocks_le(message).chunks_exact(64) {
        let mut m = [0u32; 16];
        for (i, word) in block.chunks_exact(4).enumerate() {
            m[i] = u32::from_le_bytes(word.try_into().unwrap());
        }
        let [mut a, mut b, mut c, mut d] = h;
        for i in 0..64 {
            let (f, g) = match i / 16 {
                0 => ((b & c) | (!b & d), i),
                1 => ((d & b) | (!d & c), (5 * i + 1) % 16),
                2 => (b ^ c ^ d, (3 * i + 5) % 16),
                _ => (c ^ (b | !d), (7 * i) % 16),
            };
            let t = f
                .wrapping_add(a)
                .wrapping_add(k[i])
                .wrapping_add(m[g]);
            a = d;
            d = c;
            c = b;
            b = b.wrapping_add(t.rotate_left(S[i]));
        }
        for (slot, v) in h.iter_mut().zip([a, b, c, d]) {
            *slot = slot.wrapping_add(v);
        }
    }
    let mut out = [0u8; 16];
    for (chunk, word) in out.chunks_exact_mut(4).zip(h) {
        chunk.copy_from_slice(&word.to_le_bytes());
    }
    out
}

/// Merkle-Damgård padding, big-endian bit length (SHA-1).
fn padded_blocks_be(message: &[u8]) -> Vec<u8> {
    let mut data = message.to_vec();
    let bit_len = (message.len() as u64) * 8;
    data.push(0x80);
    while data.len() % 64 != 56 {
        data.push(0);
    }
    data.extend_from_slice(&bit_len.to_be_bytes());
    data
}

/// Same padding with a little-endian bit length (MD5).
fn padded_blocks_le(message: &[u8]) -> Vec<u8> {
    let mut data = message.to_vec();
    let bit_len = (message.len() as u64) * 8;
    data.push(0x80);
    while data.len() % 64 != 56 {
        data.push(0);
    }
    data.extend_from_slice(&bit_len.to_le_bytes());
    data
}

/// RFC 2104 HMAC over any 64-byte-block hash.
fn hmac<const N: usize>(hash: fn(&[u8]) -> [u8; N], key: &[u8], data: &[u8]) -> [u8; N] {
    let mut key_block = [0u8; 64];
    if key.len() > 64 {
        key_block[..N].copy_from_slice(&hash(key));
    } else {
        key_block[..key.len()].copy_from_slice(key);
    }
    let mut inner: Vec<u8> = key_block.iter().map(|b| b ^ 0x36).collect();
    inner.extend_from_slice(data);
    let inner_digest = hash(&inner);
    let mut outer: Vec<u8> = key_block.iter().map(|b| b ^ 0x5c).collect();
    outer.extend_from_slice(&inner_digest);
    hash(&outer)
}

pub fn hmac_sha1(key: &[u8], data: &[u8]) -> [u8; 20] {
    hmac(sha1, key, data)
}

pub fn hmac_md5(key: &[u8], data: &[u8]) -> [u8; 16] {
    hmac(md5, key, data)
}

pub fn pbkdf2_sha1(password: &[u8], salt: &[u8], iterations: u32, dk_len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(dk_len + 20);
    let mut block_index: u32 = 1;
    while out.len() < dk_len {
        let mut salted = salt.to_vec();
        salted.extend_from_slice(&block_index.to_be_bytes());
        let mut u = hmac_sha1(password, &salted);
        let mut acc = u;
        for _ in 1..iterations {
            u = hmac_sha1(password, &u);
            for (a, b) in acc.iter_mut().zip(u) {
                *a ^= b;
            }
        }
        out.extend_from_slice(&acc);
        block_index += 1;
    }
    out.truncate(dk_len);
    out
}

pub fn pmk(passphrase: &str, essid: &[u8]) -> [u8; 32] {
    let dk = pbkdf2_sha1(passphrase.as_bytes(), essid, 4096, 32);
    dk.try_into().unwrap()
}

pub fn pmkid(pmk: &[u8; 32], mac_ap: &[u8; 6], mac_sta: &[u8; 6]) -> [u8; 16] {
    let mut data = Vec::with_capacity(20);
    data.extend_from_slice(b"PMK Name");
    data.extend_from_slice(mac_ap);
    data.extend_from_slice(mac_sta);
    let digest = hmac_sha1(pmk, &data);
    digest[..16].try_into().unwrap()
}

/// 802.11 PRF truncated to 512 bits: concatenated
/// HMAC-SHA1(key, label | 0x00 | data | counter) over counters 0..=3.
pub fn prf_512(key: &[u8], label: &[u8], data: &[u8]) -> [u8; 64] {
    let mut out = Vec::with_capacity(80);
    for counter in 0u8..4 {
        let mut input = label.to_vec();
        input.push(0);
        input.extend_from_slice(data);
        input.push(counter);
        out.extend_from_slice(&hmac_sha1(key, &input));
    }
    out[..64].try_into().unwrap()
}

/// Message-2 MIC for a handshake: KCK = first 16 PTK bytes, then
/// HMAC-MD5 (version 1) or truncated HMAC-SHA1 (version 2) over the
/// MIC-zeroed EAPoL frame.
#[allow(clippy::too_many_arguments)]
pub fn handshake_mic(
    pmk: &[u8; 32],
    mac_ap: &[u8; 6],
    mac_sta: &[u8; 6],
    ap_nonce: &[u8; 32],
    sta_nonce: &[u8; 32],
    eapol_frame: &[u8],
    key_version: u8,
) -> [u8; 16] {
    let (lo_mac, hi_mac) = if mac_ap <= mac_sta {
        (mac_ap, mac_sta)
    } else {
        (mac_sta, mac_ap)
    };
    let (lo_nonce, hi_nonce) = if ap_nonce <= sta_nonce {
        (ap_nonce, sta_nonce)
    } else {
        (sta_nonce, ap_nonce)
    };
    let mut data = Vec::with_capacity(76);
    data.extend_from_slice(lo_mac);
    data.extend_from_slice(hi_mac);
    data.extend_from_slice(lo_nonce);
    data.extend_from_slice(hi_nonce);
    let ptk = prf_512(pmk, b"Pairwise key expansion", &data);
    let kck = &ptk[..16];
    match key_version {
        1 => hmac_md5(kck, eapol_frame),
        2 => hmac_sha1(kck, eapol_frame)[..16].try_into().unwrap(),
        other => panic!("unsupported key version {other}"),
    }
}
