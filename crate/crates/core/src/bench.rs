//! Deterministic operation-count scaling benchmark.
//!
//! Worst-case instances pair a period of `D` unit components with a period of
//! `D - 1` unit components (slot length 1, so the cycle is `D * (D - 1)` long)
//! and query the last component of each. Costs are counted operations, not
//! wall-clock time, so reports are reproducible.

use serde::{Deserialize, Serialize};

use crate::coincidence::decide_with_cost;
use crate::error::Result;
use crate::oracle::oracle_decide;
use crate::recurrence::SequenceSpec;

pub const MIN_EXPONENT: u32 = 4;
pub const CSV_HEADER: &str = "max_dur,gcd_method_ops,oracle_ops";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub max_dur: u64,
    pub gcd_method_ops: u64,
    pub oracle_ops: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub gcd_slope: f64,
    pub oracle_slope: f64,
}

/// Periods `d` and `d - 1` built from unit components.
///
/// # Panics
/// If `d < 2`.
pub fn worst_case_pair(d: u64) -> (SequenceSpec, SequenceSpec) {
    assert!(d >= 2, "need d >= 2");
    let x = SequenceSpec::from_durations("x", &vec![1; d as usize]).expect("unit durations");
    let y = SequenceSpec::from_durations("y", &vec![1; d as usize - 1]).expect("unit durations");
    (x, y)
}

pub fn measure(d: u64) -> Result<BenchRow> {
    let (x, y) = worst_case_pair(d);
    let (p, q) = (x.len() - 1, y.len() - 1);
    let (_, cost) = decide_with_cost(&x, &y, p, q)?;
    let report = oracle_decide(&x, &y, p, q)?;
    Ok(BenchRow {
        max_dur: d,
        gcd_method_ops: cost.total(),
        oracle_ops: report.comparisons,
    })
}

/// Rows for `D = 2^MIN_EXPONENT ..= 2^max_exponent`.
pub fn run(max_exponent: u32) -> Result<BenchReport> {
    let rows = (MIN_EXPONENT..=max_exponent)
        .map(|j| measure(1u64 << j))
        .collect::<Result<Vec<_>>>()?;
    let slope_of = |f: fn(&BenchRow) -> u64| {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .map(|r| (r.max_dur as f64, f(r) as f64))
            .collect();
        loglog_slope(&pts)
    };
    Ok(BenchReport {
        gcd_slope: slope_of(|r| r.gcd_method_ops),
        oracle_slope: slope_of(|r| r.oracle_ops),
        rows,
    })
}

/// Least-squares slope of `ln y` against `ln x`. NaN with fewer than two points.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    if points.len() < 2 {
        return f64::NAN;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{}\n",
                r.max_dur, r.gcd_method_ops, r.oracle_ops
            ));
        }
        out
    }
}
