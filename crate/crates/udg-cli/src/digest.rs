//! Order-independent answer fingerprints for the CSV records.
//!
//! Two runs that compute the same answers print the same digest no matter
//! which method produced them or in what order the roots were processed,
//! so cross-method agreement can be checked straight off the CSV.

use udg::sssp::{ShortestPathResult, UNREACHED};

/// SplitMix64 finaliser; a cheap 64-bit mixer.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Wrapping sum of the mixed hop distances (unreached maps to u64::MAX),
/// combined over all trees. Insensitive to root order by construction.
pub fn digest_trees<'a>(trees: impl IntoIterator<Item = &'a ShortestPathResult>) -> u64 {
    let mut acc = 0u64;
    for spt in trees {
        for &d in &spt.dist {
            let v = if d == UNREACHED { u64::MAX } else { d as u64 };
            acc = acc.wrapping_add(splitmix64(v));
        }
    }
    acc
}

/// Mixed separator size; infeasible maps to u64::MAX.
pub fn digest_separation(size: Option<u32>) -> u64 {
    splitmix64(size.map_or(u64::MAX, |s| s as u64))
}

pub fn hex(d: u64) -> String {
    format!("{d:016x}")
}
