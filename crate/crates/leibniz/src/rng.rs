//! Deterministic 64-bit pseudo-random generator for sampled selections.
//!
//! This is SplitMix64 (Steele, Lea & Flood's `splitmix64` finalizer over a
//! Weyl sequence), chosen because it is trivially portable and its output
//! for a given seed is stable across platforms and releases. Every sampled
//! verdict records the seed it was produced with, so reports are
//! reproducible bit-for-bit.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi` by reduction. The modulo bias is
    /// negligible for the tiny ranges used here (|hi - lo| < 2^6).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}
