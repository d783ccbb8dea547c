//! Brute-force cycle projection.
//!
//! Every incidence of `x[p]` in one cycle is intersected with every incidence
//! of `y[q]`. One cycle is enough because all cycles repeat the same pattern.
//! Cost is `(cycle / D_x) * (cycle / D_y)` comparisons, quadratic in the
//! periods when they are coprime.

use serde::Serialize;

use crate::coincidence::Decision;
use crate::error::Result;
use crate::interval::Interval;
use crate::recurrence::{cycle_duration, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub decision: Decision,
    /// Pairwise incidence intersections, ascending.
    pub windows: Vec<Interval>,
    pub comparisons: u64,
}

pub fn oracle_decide(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<OracleReport> {
    x.check_index(p)?;
    y.check_index(q)?;
    let cycle = cycle_duration(x, y);
    let xs = x.incidences_of(p, cycle)?;
    let ys = y.incidences_of(q, cycle)?;

    let mut comparisons = 0u64;
    let mut windows = Vec::new();
    for a in &xs {
        for b in &ys {
            comparisons += 1;
            if let Some(w) = a.intersection(b) {
                windows.push(w);
            }
        }
    }
    windows.sort();

    let decision = Decision {
        coincides: !windows.is_empty(),
        witness: windows.first().copied(),
        via: None,
    };
    Ok(OracleReport {
        decision,
        windows,
        comparisons,
    })
}

pub fn enumerate_coincidences(
    x: &SequenceSpec,
    y: &SequenceSpec,
    p: usize,
    q: usize,
) -> Result<Vec<Interval>> {
    oracle_decide(x, y, p, q).map(|r| r.windows)
}
