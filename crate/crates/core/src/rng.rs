//! Seeded randomness.
//!
//! All sampling goes through SplitMix64 (Steele, Lea and Flood, 2014): the
//! state advances by the odd constant `0x9E3779B97F4A7C15` and each output
//! is the state passed through the finalizer below. It is a counter-based
//! generator, so output `k` for seed `s` is `mix(s + (k+1)·γ)` and can be
//! reproduced in any language with 64-bit wrapping arithmetic.
//!
//! Bounded draws use rejection: a 64-bit output `x` is accepted when
//! `x < 2^64 - (2^64 mod b)` and mapped to `x mod b`. 128-bit draws combine
//! two outputs, high word first.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Seed(pub u64);

impl Seed {
    /// An independent seed for sub-stream `index`, e.g. one per trial or
    /// per block.
    pub fn derive(self, index: u64) -> Seed {
        let mut g = SplitMix64::new(Seed(self.0 ^ mix(index.wrapping_add(1).wrapping_mul(GAMMA))));
        Seed(g.next_u64())
    }
}

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform integer in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform integer in `0..bound` for 128-bit bounds.
    pub fn below_u128(&mut self, bound: u128) -> u128 {
        assert!(bound > 0, "empty range");
        if bound <= u64::MAX as u128 {
            return self.below(bound as u64) as u128;
        }
        let zone = u128::MAX - (u128::MAX - bound + 1) % bound;
        loop {
            let hi = self.next_u64() as u128;
            let x = (hi << 64) | self.next_u64() as u128;
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}
