//! Reproducible random instances.
//!
//! The stream is SplitMix64, reproduced bit-exactly so that `verify` runs can
//! be replayed by any implementation given the same seed:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! return z ^ (z >> 31)
//! ```
//!
//! A sequence draws its component count as `1 + next() % 8`, then each
//! duration as `1 + next() % 16`, components named `c0, c1, ...`. An instance
//! draws `x` (named `x`) and then `y` (named `y`) from the same stream.

use crate::recurrence::SequenceSpec;

pub const MAX_COMPONENTS: u64 = 8;
pub const MAX_DURATION: u64 = 16;

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

    pub fn sequence(&mut self, name: &str) -> SequenceSpec {
        let len = 1 + self.next_u64() % MAX_COMPONENTS;
        let durs: Vec<u64> = (0..len)
            .map(|_| 1 + self.next_u64() % MAX_DURATION)
            .collect();
        SequenceSpec::from_durations(name, &durs).expect("generated durations are positive")
    }

    pub fn instance(&mut self) -> (SequenceSpec, SequenceSpec) {
        let x = self.sequence("x");
        let y = self.sequence("y");
        (x, y)
    }
}

/// The first `n` instances of the stream seeded with `seed`.
pub fn instances(seed: u64, n: usize) -> Vec<(SequenceSpec, SequenceSpec)> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| rng.instance()).collect()
}
