//! Stable per-task seed derivation.
//!
//! Every (case, variant) task gets its own RNG stream derived from the
//! master seed, so parallel scheduling order cannot influence any output.

/// Derive a 64-bit seed from a master seed, a string tag (usually a case
/// id), and a task index. FNV-1a over the raw bytes, finished with a
/// splitmix64 avalanche; stable across platforms and releases.
pub fn derive_seed(master: u64, tag: &str, index: u64) -> u64 {
    const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = FNV_OFFSET;
    for b in master
        .to_le_bytes()
        .iter()
        .chain(tag.as_bytes())
        .chain(&index.to_le_bytes())
    {
        h = (h ^ u64::from(*b)).wrapping_mul(FNV_PRIME);
    }
    splitmix64(h)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}
