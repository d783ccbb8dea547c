//! Deciding whether component `p` of `x` and component `q` of `y` ever share
//! time within a cycle of their double recurrence.
//!
//! Each component window is placed on the gcd slot grid ([`create_network`]).
//! Any slot `r` of `x` and slot `s` of `y` coincide exactly once per cycle, so
//! pinning both to a shared slot frame reduces the question to a two-window
//! overlap test per entry pair ([`check_pair`]). A slot lying wholly inside
//! either window settles the question early.

mod battery;
mod network;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use battery::{fired_theorems, Theorem};
pub use network::{
    check_pair, create_network, network_for_period, slot_frame_window, Network, NetworkEntry,
    SlotFrameWindow,
};

use crate::error::Result;
use crate::interval::Interval;
use crate::partition::GcdPartition;
use crate::recurrence::SequenceSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub coincides: bool,
    /// A maximal coincidence window in cycle coordinates.
    pub witness: Option<Interval>,
    /// Period-local slots `(r, s)` whose alignment produced the witness.
    pub via: Option<(u64, u64)>,
}

impl Decision {
    pub fn negative() -> Self {
        Decision {
            coincides: false,
            witness: None,
            via: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

/// Work done by one [`decide`] call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DecideCost {
    pub network_ops: u64,
    pub pair_checks: u64,
    /// Which network's flag answered the question, if any.
    pub flagged: Option<Side>,
}

impl DecideCost {
    pub fn total(&self) -> u64 {
        self.network_ops + self.pair_checks
    }
}

/// Both networks for a query, on the shared slot grid.
#[derive(Debug, Clone)]
pub struct Query {
    pub partition: GcdPartition,
    pub x: Network,
    pub y: Network,
}

impl Query {
    pub fn build(x: &SequenceSpec, y: &SequenceSpec, p: usize, q: usize) -> Result<Self> {
        x.check_index(p)?;
        y.check_index(q)?;
        let partition = GcdPartition::build(x, y);
        let g = partition.slot_dur;
        Ok(Query {
            partition,
            y: create_network(y, g, q)?,
            x: create_network(x, g, p)?,
        })
    }

    /// Entry pairs in lexicographic scan order.
    pub fn pairs(&self) -> impl Iterator<Item = (&NetworkEntry, &NetworkEntry)> {
        self.x
            .entries
            .iter()
            .flat_map(move |ex| self.y.entries.iter().map(move |ey| (ex, ey)))
    }

    /// The absolute coincidence window produced by aligning this entry pair, if any.
    pub fn window(&self, ex: &NetworkEntry, ey: &NetworkEntry) -> Option<Interval> {
        let (lo, hi) = self.x.frame(ex).overlap(&self.y.frame(ey))?;
        let k = self
            .partition
            .align_slot(ex.slot, ey.slot)
            .expect("entry slots lie within their periods");
        let base = (k * self.partition.slot_dur) as i64;
        Some(Interval::from_bounds((base + lo) as u64, (base + hi) as u64).expect("lo < hi"))
    }

    pub fn fired(&self, ex: &NetworkEntry, ey: &NetworkEntry) -> BTreeSet<Theorem> {
        fired_theorems(ex, self.x.dur(), ey, self.y.dur(), self.partition.slot_dur)
    }
}

/// Decides coincidence of `x[p]` and `y[q]`.
pub fn decide(x: &SequenceSpec, y: &SequenceSpec, p: usize, q: usize) -> Result<Decision> {
    decide_with_cost(x, y, p, q).map(|(d, _)| d)
}

/// [`decide`], also reporting the primitive operations spent.
pub fn decide_with_cost(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<(Decision, DecideCost)> {
    let query = Query::build(x, y, p, q)?;
    // Both networks are built either way: the witness scan needs them.
    let mut cost = DecideCost {
        network_ops: query.y.ops + query.x.ops,
        ..Default::default()
    };
    if query.y.flag {
        cost.flagged = Some(Side::Y);
    } else if query.x.flag {
        cost.flagged = Some(Side::X);
    }

    // A flag already settles the verdict; the scan below only locates the witness.
    let mut decision = Decision {
        coincides: cost.flagged.is_some(),
        witness: None,
        via: None,
    };
    for (ex, ey) in query.pairs() {
        cost.pair_checks += 1;
        if let Some(w) = query.window(ex, ey) {
            decision = Decision {
                coincides: true,
                witness: Some(w),
                via: Some((ex.slot, ey.slot)),
            };
            break;
        }
    }
    debug_assert!(decision.coincides == decision.witness.is_some());
    Ok((decision, cost))
}

/// Every maximal coincidence window in `[0, cycle)`, ascending.
pub fn coincidence_windows(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<Vec<Interval>> {
    let query = Query::build(x, y, p, q)?;
    let windows: BTreeSet<Interval> = query
        .pairs()
        .filter_map(|(ex, ey)| query.window(ex, ey))
        .collect();
    Ok(windows.into_iter().collect())
}

/// The earliest coincidence window in the cycle.
pub fn first_coincidence(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<Option<Interval>> {
    Ok(coincidence_windows(x, y, p, q)?.into_iter().next())
}

/// How the rule battery fares on every entry pair of one query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BatteryAudit {
    pub pairs: u64,
    /// Pairs where `check_pair` holds.
    pub overlapping: u64,
    /// Pairs where at least one rule fires.
    pub fired: u64,
    /// Rule fired but the windows do not overlap. Must stay zero.
    pub unsound: u64,
    /// Windows overlap but no rule fires.
    pub gaps: u64,
}

impl BatteryAudit {
    pub fn merge(&mut self, other: &BatteryAudit) {
        self.pairs += other.pairs;
        self.overlapping += other.overlapping;
        self.fired += other.fired;
        self.unsound += other.unsound;
        self.gaps += other.gaps;
    }
}

pub fn audit_battery(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<BatteryAudit> {
    let query = Query::build(x, y, p, q)?;
    let mut audit = BatteryAudit::default();
    for (ex, ey) in query.pairs() {
        let overlap = check_pair(&query.x.frame(ex), &query.y.frame(ey));
        let fired = !query.fired(ex, ey).is_empty();
        audit.pairs += 1;
        audit.overlapping += overlap as u64;
        audit.fired += fired as u64;
        audit.unsound += (fired && !overlap) as u64;
        audit.gaps += (overlap && !fired) as u64;
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn weekday() -> SequenceSpec {
        SequenceSpec::from_pairs(
            "weekday",
            &[
                ("Mon", 1),
                ("Tue", 1),
                ("Wed", 1),
                ("Thu", 1),
                ("Fri", 1),
                ("Sat", 1),
                ("Sun", 1),
            ],
        )
        .unwrap()
    }

    fn machine(rest: u64) -> SequenceSpec {
        SequenceSpec::from_pairs("machine", &[("Working", 5), ("Rest", rest)]).unwrap()
    }

    fn pl1() -> SequenceSpec {
        SequenceSpec::from_pairs("PL-1", &[("P1", 3), ("P2", 3), ("P3", 2)]).unwrap()
    }

    fn pl2() -> SequenceSpec {
        SequenceSpec::from_pairs("PL-2", &[("P4", 2), ("P5", 2)]).unwrap()
    }

    fn iv(s: u64, e: u64) -> Interval {
        Interval::from_bounds(s, e).unwrap()
    }

    #[test]
    fn factory() {
        let (d, cost) = decide_with_cost(&weekday(), &machine(3), 2, 1).unwrap();
        assert!(d.coincides);
        assert_eq!(cost.flagged, Some(Side::Y));
        let w = d.witness.unwrap();
        assert!([iv(23, 24), iv(30, 31), iv(37, 38)].contains(&w));
        assert_eq!(
            first_coincidence(&weekday(), &machine(3), 2, 1).unwrap(),
            Some(iv(23, 24))
        );
    }

    #[test]
    fn modified_factory() {
        assert_eq!(
            decide(&weekday(), &machine(2), 2, 1).unwrap(),
            Decision::negative()
        );
        assert_eq!(
            first_coincidence(&weekday(), &machine(2), 2, 1).unwrap(),
            None
        );
    }

    #[test]
    fn production_line() {
        let d = decide(&pl1(), &pl2(), 1, 1).unwrap();
        assert!(d.coincides);
        assert_eq!(d.witness, Some(iv(3, 4)));
        assert_eq!(
            first_coincidence(&pl1(), &pl2(), 0, 1).unwrap(),
            Some(iv(2, 3))
        );
        let q = Query::build(&pl1(), &pl2(), 0, 1).unwrap();
        let (ex, ey) = q.pairs().next().unwrap();
        assert_eq!(
            q.fired(ex, ey).into_iter().collect::<Vec<_>>(),
            vec![Theorem::C6_2]
        );
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            decide(&weekday(), &machine(3), 7, 0),
            Err(Error::IndexOutOfRange { index: 7, bound: 7 })
        );
        assert!(decide(&weekday(), &machine(3), 0, 2).is_err());
        assert!(first_coincidence(&weekday(), &machine(3), 0, 2).is_err());
    }

    #[test]
    fn via_pair_is_first_in_scan_order() {
        let d = decide(&weekday(), &machine(3), 2, 1).unwrap();
        // Wednesday has one slot (2); Rest's first slot is 5.
        assert_eq!(d.via, Some((2, 5)));
        let k = GcdPartition::from_periods(7, 8).align_slot(2, 5).unwrap();
        assert_eq!(d.witness, Some(iv(k, k + 1)));
    }
}
