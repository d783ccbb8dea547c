//! The gcd-partition of a sequence pair.
//!
//! Both periods are cut into slots of length `g = gcd(D_x, D_y)`: `R = D_x / g`
//! slots per period of `x` and `S = D_y / g` per period of `y`. Because `R` and
//! `S` are coprime, the cycle holds exactly `R * S` slots and slot `k` is
//! simultaneously slot `k mod R` of some `x` period and slot `k mod S` of some
//! `y` period. Every residue pair `(r, s)` is realised by exactly one `k`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::recurrence::SequenceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GcdPartition {
    /// Slot duration.
    #[serde(rename = "g")]
    pub slot_dur: u64,
    /// Slots per period of `x`.
    #[serde(rename = "R")]
    pub slots_x: u64,
    /// Slots per period of `y`.
    #[serde(rename = "S")]
    pub slots_y: u64,
}

impl GcdPartition {
    pub fn build(x: &SequenceSpec, y: &SequenceSpec) -> Self {
        Self::from_periods(x.period(), y.period())
    }

    /// # Panics
    /// If either period is zero.
    pub fn from_periods(period_x: u64, period_y: u64) -> Self {
        assert!(period_x > 0 && period_y > 0, "periods must be positive");
        let g = period_x.gcd(&period_y);
        GcdPartition {
            slot_dur: g,
            slots_x: period_x / g,
            slots_y: period_y / g,
        }
    }

    /// Number of slots in one cycle, `R * S`.
    pub fn cycle_slots(&self) -> u64 {
        self.slots_x * self.slots_y
    }

    /// Cycle length in time units, `R * S * g`.
    pub fn cycle(&self) -> u64 {
        self.cycle_slots() * self.slot_dur
    }

    /// `(k mod R, k mod S)`.
    pub fn residues(&self, k: u64) -> (u64, u64) {
        (k % self.slots_x, k % self.slots_y)
    }

    /// The unique cycle slot `k` with `k ≡ r (mod R)` and `k ≡ s (mod S)`.
    pub fn align_slot(&self, r: u64, s: u64) -> Result<u64> {
        let (big_r, big_s) = (self.slots_x, self.slots_y);
        if r >= big_r {
            return Err(out_of_range(r, big_r));
        }
        if s >= big_s {
            return Err(out_of_range(s, big_s));
        }
        // k = r + R*t, with R*t ≡ s - r (mod S). gcd(R, S) = 1, so R has an inverse mod S.
        let (big_r, big_s, r, s) = (big_r as i128, big_s as i128, r as i128, s as i128);
        let ext = big_r.extended_gcd(&big_s);
        debug_assert_eq!(ext.gcd, 1);
        let inv = ext.x.mod_floor(&big_s);
        let t = ((s - r) * inv).mod_floor(&big_s);
        Ok((r + big_r * t) as u64)
    }

    /// Absolute span of cycle slot `k`.
    pub fn slot_interval(&self, k: u64) -> Result<Interval> {
        if k >= self.cycle_slots() {
            return Err(out_of_range(k, self.cycle_slots()));
        }
        Interval::new(k * self.slot_dur, self.slot_dur)
    }
}

fn out_of_range(index: u64, bound: u64) -> Error {
    Error::IndexOutOfRange {
        index: index as usize,
        bound: bound as usize,
    }
}
