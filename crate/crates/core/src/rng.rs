//! Portable seeded pseudo-random numbers.
//!
//! All randomness in this crate comes from SplitMix64 (Steele, Lea and Flood,
//! 2014), so a seed produces the same stream on every platform and toolchain:
//!
//! ```text
//! state <- state + 0x9E37_79B9_7F4A_7C15           (wrapping)
//! z <- state
//! z <- (z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9     (wrapping)
//! z <- (z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB     (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! Bounded draws use rejection on the low end of the 64-bit range
//! (`r >= 2^64 mod n`, then `r mod n`), and shuffles are Fisher-Yates from the
//! last index down.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform integer in `0..n`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % n;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// The `index`-th output (0-based) of a generator seeded with `seed`, without
/// stepping through the earlier ones.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index + 1)))
}
