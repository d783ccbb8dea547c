//! Slot networks: how one component window sits on the gcd slot grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{allen_relation, Interval, Relation};
use crate::recurrence::SequenceSpec;

/// One slot that positively overlaps the component window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetworkEntry {
    /// Period-local slot index.
    pub slot: u64,
    /// Component window relative to the slot (component first).
    pub relation: Relation,
    /// Length of the slot part before the component starts, or 0.
    pub left_gap: u64,
    /// Length of the slot part after the component ends, or 0.
    pub right_gap: u64,
    pub common_dur: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Network {
    pub component: usize,
    /// Period-local window of the component.
    pub window: Interval,
    pub slot_dur: u64,
    pub entries: Vec<NetworkEntry>,
    /// Set when some slot lies entirely inside the component window.
    pub flag: bool,
    /// Cursor moves spent reaching the component and walking its slots.
    pub ops: u64,
}

impl Network {
    /// Builds the entries for a component incidence given in absolute time.
    ///
    /// `period` is the sequence period (a multiple of `slot_dur`); slot
    /// indices are reported relative to the period containing `incidence`.
    pub fn from_incidence(
        component: usize,
        incidence: Interval,
        slot_dur: u64,
        period: u64,
    ) -> Result<Self> {
        if slot_dur == 0 || !period.is_multiple_of(slot_dur) {
            return Err(Error::BadGcd { slot_dur, period });
        }
        let period_index = incidence.start() / period;
        let slots_per_period = period / slot_dur;
        let base_slot = period_index * slots_per_period;
        let first = incidence.start() / slot_dur;
        let last = (incidence.end() - 1) / slot_dur;

        let entries: Vec<NetworkEntry> = (first..=last)
            .map(|k| {
                let slot = Interval::new(k * slot_dur, slot_dur).expect("slot_dur >= 1");
                let common = incidence.intersection(&slot).expect("slot overlaps window");
                NetworkEntry {
                    slot: k - base_slot,
                    relation: allen_relation(&incidence, &slot),
                    left_gap: incidence.start().saturating_sub(slot.start()),
                    right_gap: slot.end().saturating_sub(incidence.end()),
                    common_dur: common.dur(),
                }
            })
            .collect();
        let flag = entries.iter().any(|e| e.relation.is_super());
        let local = Interval::new(incidence.start() - period_index * period, incidence.dur())?;
        Ok(Network {
            component,
            window: local,
            slot_dur,
            ops: entries.len() as u64,
            entries,
            flag,
        })
    }

    /// Offset of the component within its period.
    pub fn offset(&self) -> u64 {
        self.window.start()
    }

    pub fn dur(&self) -> u64 {
        self.window.dur()
    }

    /// The component window in the frame of `entry`'s slot.
    pub fn frame(&self, entry: &NetworkEntry) -> SlotFrameWindow {
        let lo = self.offset() as i64 - (entry.slot * self.slot_dur) as i64;
        SlotFrameWindow {
            lo,
            hi: lo + self.dur() as i64,
        }
    }
}

/// Builds the slot network of component `p` of `spec` over slots of length `g`.
pub fn create_network(spec: &SequenceSpec, g: u64, p: usize) -> Result<Network> {
    let window = spec.component_window(p)?;
    let mut net = Network::from_incidence(p, window, g, spec.period())?;
    // Reaching x_p walks p components and floor(a_p / g) slots.
    net.ops += p as u64 + window.start() / g;
    Ok(net)
}

/// Like [`create_network`], but computed from the absolute incidence of
/// component `p` in period `period_index`.
pub fn network_for_period(
    spec: &SequenceSpec,
    g: u64,
    p: usize,
    period_index: u64,
) -> Result<Network> {
    let incidence = spec
        .component_window(p)?
        .shifted(period_index * spec.period());
    Network::from_incidence(p, incidence, g, spec.period())
}

/// A component window expressed relative to the start of one slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlotFrameWindow {
    pub lo: i64,
    pub hi: i64,
}

impl SlotFrameWindow {
    /// Positive-length intersection with another window in the same frame.
    pub fn overlap(&self, other: &SlotFrameWindow) -> Option<(i64, i64)> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo < hi).then_some((lo, hi))
    }
}

/// Re-expresses `[a, a + d)` relative to slot `r` of length `g`.
pub fn slot_frame_window(a: u64, d: u64, r: u64, g: u64) -> Result<SlotFrameWindow> {
    let start = r * g;
    if d == 0 || a >= start + g || a + d <= start {
        return Err(Error::NoOverlap {
            start: a,
            end: a + d,
            slot: r as usize,
        });
    }
    let lo = a as i64 - start as i64;
    Ok(SlotFrameWindow {
        lo,
        hi: lo + d as i64,
    })
}

/// Whether the two pinned component incidences share positive time once their
/// slots are aligned.
pub fn check_pair(wx: &SlotFrameWindow, wy: &SlotFrameWindow) -> bool {
    wx.overlap(wy).is_some()
}
