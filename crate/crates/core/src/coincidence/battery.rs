//! Sufficient conditions for coincidence read off two network entries.
//!
//! Each condition inspects only the qualitative relation of a component to its
//! slot, the gap and common durations stored in the entry, the component
//! durations and the slot length. The `C` variants are the same conditions
//! with the roles of the two sequences exchanged. None of these conditions is
//! needed to decide coincidence (see [`super::check_pair`]); they are kept as
//! an independently checkable rule set.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::network::NetworkEntry;
use crate::interval::Relation::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    T6_1,
    T6_2,
    T6_3,
    T6_4,
    T6_5,
    T6_6,
    T6_7,
    T6_8,
    T6_9,
    C6_1,
    C6_2,
    C6_3,
    C6_4,
    C6_5,
    C6_6,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        use Theorem::*;
        match self {
            T6_1 => "T6.1",
            T6_2 => "T6.2",
            T6_3 => "T6.3",
            T6_4 => "T6.4",
            T6_5 => "T6.5",
            T6_6 => "T6.6",
            T6_7 => "T6.7",
            T6_8 => "T6.8",
            T6_9 => "T6.9",
            C6_1 => "C6.1",
            C6_2 => "C6.2",
            C6_3 => "C6.3",
            C6_4 => "C6.4",
            C6_5 => "C6.5",
            C6_6 => "C6.6",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Component covers a prefix of its slot.
fn start_anchored(r: Relation) -> bool {
    matches!(r, Starts | Overlaps)
}

/// Component covers a suffix of its slot.
fn end_anchored(r: Relation) -> bool {
    matches!(r, Finishes | OverlappedBy)
}

/// One side of the battery, with `a` in the first role.
struct Side<'a> {
    e: &'a NetworkEntry,
    dur: u64,
}

// One overlap-type side against a component on the same slot edge.
fn overlap_same_edge(a: &Side, b: &Side) -> bool {
    (a.e.relation == Overlaps && start_anchored(b.e.relation))
        || (a.e.relation == OverlappedBy && end_anchored(b.e.relation))
}

fn finish_then_start(a: &Side, b: &Side, g: u64) -> bool {
    a.e.relation == Finishes && b.e.relation == Starts && a.dur + b.dur > g
}

fn starts_vs_inner(a: &Side, b: &Side) -> bool {
    a.e.relation == Starts && b.e.relation == During && b.e.left_gap < a.dur
}

fn finishes_vs_inner(a: &Side, b: &Side) -> bool {
    a.e.relation == Finishes && b.e.relation == During && b.e.right_gap < a.dur
}

fn overlaps_vs_inner(a: &Side, b: &Side) -> bool {
    a.e.relation == Overlaps && b.e.relation == During && b.e.left_gap < a.e.common_dur
}

fn overlapped_vs_inner(a: &Side, b: &Side) -> bool {
    a.e.relation == OverlappedBy && b.e.relation == During && b.e.right_gap < a.e.common_dur
}

/// Identifiers of every condition whose antecedent holds for the entry pair.
pub fn fired_theorems(
    ex: &NetworkEntry,
    dx: u64,
    ey: &NetworkEntry,
    dy: u64,
    g: u64,
) -> BTreeSet<Theorem> {
    let x = Side { e: ex, dur: dx };
    let y = Side { e: ey, dur: dy };
    let mut out = BTreeSet::new();
    let mut fire = |cond: bool, t: Theorem| {
        if cond {
            out.insert(t);
        }
    };

    fire(overlap_same_edge(&x, &y), Theorem::T6_1);
    fire(overlap_same_edge(&y, &x), Theorem::C6_1);
    fire(finish_then_start(&x, &y, g), Theorem::T6_2);
    fire(finish_then_start(&y, &x, g), Theorem::C6_2);
    fire(starts_vs_inner(&x, &y), Theorem::T6_3);
    fire(starts_vs_inner(&y, &x), Theorem::C6_3);
    fire(finishes_vs_inner(&x, &y), Theorem::T6_4);
    fire(finishes_vs_inner(&y, &x), Theorem::C6_4);
    fire(overlaps_vs_inner(&x, &y), Theorem::T6_5);
    fire(overlaps_vs_inner(&y, &x), Theorem::C6_5);
    fire(overlapped_vs_inner(&x, &y), Theorem::T6_6);
    fire(overlapped_vs_inner(&y, &x), Theorem::C6_6);

    fire(
        (ex.relation == Starts && ey.relation == Starts)
            || (ex.relation == Finishes && ey.relation == Finishes),
        Theorem::T6_7,
    );

    // Both strictly inside their slots; j and k are the leading gaps.
    let (j, k) = (ex.left_gap, ey.left_gap);
    fire(
        ex.relation == During
            && ey.relation == During
            && ((k <= j && j < k + dy) || (j <= k && k < j + dx)),
        Theorem::T6_8,
    );

    fire(
        ex.relation.is_super() || ey.relation.is_super(),
        Theorem::T6_9,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(relation: Relation, left_gap: u64, right_gap: u64, common_dur: u64) -> NetworkEntry {
        NetworkEntry {
            slot: 0,
            relation,
            left_gap,
            right_gap,
            common_dur,
        }
    }

    #[test]
    fn production_line_pair_fires_swapped_t6_2() {
        let p1 = e(Starts, 0, 1, 3);
        let p5 = e(Finishes, 2, 0, 2);
        let fired = fired_theorems(&p1, 3, &p5, 2, 4);
        assert_eq!(fired.into_iter().collect::<Vec<_>>(), vec![Theorem::C6_2]);
    }

    #[test]
    fn super_interval_fires_t6_9() {
        let rest = e(StartedBy, 0, 0, 1);
        let wed = e(Equals, 0, 0, 1);
        assert!(fired_theorems(&wed, 1, &rest, 3, 1).contains(&Theorem::T6_9));
        assert!(fired_theorems(&e(During, 2, 1, 1), 1, &rest, 3, 1).contains(&Theorem::T6_9));
    }

    #[test]
    fn starts_starts_fires_t6_7() {
        for (dx, dy) in [(1, 1), (2, 5), (9, 3)] {
            let fired = fired_theorems(
                &e(Starts, 0, 10 - dx, dx),
                dx,
                &e(Starts, 0, 10 - dy, dy),
                dy,
                10,
            );
            assert!(fired.contains(&Theorem::T6_7));
        }
    }

    #[test]
    fn prefix_against_suffix_is_not_claimed() {
        // x covers [0,2) of a slot of 6 (overlaps), y covers [5,6) (finishes): disjoint.
        let x = e(Overlaps, 0, 4, 2);
        let y = e(Finishes, 5, 0, 1);
        assert!(fired_theorems(&x, 4, &y, 1, 6).is_empty());
    }

    #[test]
    fn inner_windows() {
        // j = 1, k = 3, dx = 3: [1,4) and [3,4) overlap.
        let x = e(During, 1, 2, 3);
        let y = e(During, 3, 2, 1);
        assert!(fired_theorems(&x, 3, &y, 1, 6).contains(&Theorem::T6_8));
        // [1,3) and [3,4) only meet.
        let x = e(During, 1, 3, 2);
        assert!(!fired_theorems(&x, 2, &y, 1, 6).contains(&Theorem::T6_8));
    }

    #[test]
    fn ids_are_stable() {
        assert_eq!(serde_json::to_string(&Theorem::C6_2).unwrap(), "\"C6.2\"");
        assert_eq!(Theorem::T6_9.to_string(), "T6.9");
    }
}
