//! Fixed-duration recurring sequences.
//!
//! A [`SequenceSpec`] is an ordered list of components that repeat back to back
//! forever, starting at time 0. Component `p` occupies
//! `[offset(p) + i * period, offset(p) + i * period + dur(p))` in period `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Interval, TimeMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub dur: u64,
}

/// A validated recurring sequence. Construction enforces `len >= 1` and
/// every component duration `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSequence", into = "RawSequence")]
pub struct SequenceSpec {
    name: String,
    components: Vec<Component>,
    /// `offsets[p]` is the start of component `p` within a period;
    /// `offsets[len]` is the period.
    offsets: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawSequence {
    name: String,
    components: Vec<Component>,
}

impl TryFrom<RawSequence> for SequenceSpec {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        SequenceSpec::new(raw.name, raw.components)
    }
}

impl From<SequenceSpec> for RawSequence {
    fn from(spec: SequenceSpec) -> Self {
        RawSequence {
            name: spec.name,
            components: spec.components,
        }
    }
}

impl SequenceSpec {
    pub fn new(name: impl Into<String>, components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(bad) = components.iter().position(|c| c.dur == 0) {
            return Err(Error::NonPositiveDuration(bad));
        }
        let mut offsets = Vec::with_capacity(components.len() + 1);
        let mut acc = 0u64;
        offsets.push(0);
        for c in &components {
            acc += c.dur;
            offsets.push(acc);
        }
        Ok(SequenceSpec {
            name: name.into(),
            components,
            offsets,
        })
    }

    /// Shorthand for `new` from `(name, dur)` pairs.
    pub fn from_pairs<S: AsRef<str>>(name: &str, pairs: &[(S, u64)]) -> Result<Self> {
        let comps = pairs
            .iter()
            .map(|(n, d)| Component {
                name: n.as_ref().to_string(),
                dur: *d,
            })
            .collect();
        SequenceSpec::new(name, comps)
    }

    /// Components named `c0, c1, ...` with the given durations.
    pub fn from_durations(name: &str, durs: &[u64]) -> Result<Self> {
        let pairs: Vec<(String, u64)> = durs
            .iter()
            .enumerate()
            .map(|(i, d)| (format!("c{i}"), *d))
            .collect();
        SequenceSpec::from_pairs(name, &pairs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Always false for a validated spec.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Total duration of one period.
    pub fn period(&self) -> u64 {
        self.offsets[self.len()]
    }

    pub fn check_index(&self, p: usize) -> Result<()> {
        if p >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: p,
                bound: self.len(),
            });
        }
        Ok(())
    }

    pub fn offset(&self, p: usize) -> Result<u64> {
        self.check_index(p)?;
        Ok(self.offsets[p])
    }

    pub fn dur(&self, p: usize) -> Result<u64> {
        self.check_index(p)?;
        Ok(self.components[p].dur)
    }

    /// Window of component `p` in period-local coordinates.
    pub fn component_window(&self, p: usize) -> Result<Interval> {
        self.check_index(p)?;
        Interval::new(self.offsets[p], self.components[p].dur)
    }

    /// The time map of `n` consecutive periods starting at 0.
    pub fn unroll(&self, n: u64) -> TimeMap {
        let period = self.period();
        (0..n)
            .flat_map(|i| {
                self.components
                    .iter()
                    .zip(&self.offsets)
                    .map(move |(c, a)| Interval::new(a + i * period, c.dur).expect("dur >= 1"))
            })
            .collect::<Vec<_>>()
            .into()
    }

    /// Incidences of component `p` within `[0, horizon)`, ascending.
    pub fn incidences_of(&self, p: usize, horizon: u64) -> Result<Vec<Interval>> {
        let window = self.component_window(p)?;
        let period = self.period();
        if horizon == 0 || !horizon.is_multiple_of(period) {
            return Err(Error::BadHorizon { horizon, period });
        }
        Ok((0..horizon / period)
            .map(|i| window.shifted(i * period))
            .collect())
    }

    /// Resolves a component name to its index.
    pub fn resolve(&self, name: &str) -> Result<usize> {
        let mut hits = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.name == name);
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => Ok(i),
            (Some(_), Some(_)) => Err(Error::AmbiguousComponent {
                sequence: self.name.clone(),
                name: name.to_string(),
            }),
            (None, _) => Err(Error::UnknownComponent {
                sequence: self.name.clone(),
                name: name.to_string(),
            }),
        }
    }
}

/// Identity check kept for API symmetry with the other operations; a
/// `SequenceSpec` value is valid by construction.
pub fn validate(spec: SequenceSpec) -> Result<SequenceSpec> {
    SequenceSpec::new(spec.name, spec.components)
}

/// Length of one cycle of the double recurrence: `lcm` of the two periods.
pub fn cycle_duration(x: &SequenceSpec, y: &SequenceSpec) -> u64 {
    num_integer::lcm(x.period(), y.period())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{cover_star, holds, Derived};

    fn machine() -> SequenceSpec {
        SequenceSpec::from_pairs("machine", &[("Working", 5), ("Rest", 3)]).unwrap()
    }

    fn weekday() -> SequenceSpec {
        SequenceSpec::from_durations("weekday", &[1; 7]).unwrap()
    }

    fn pl2() -> SequenceSpec {
        SequenceSpec::from_pairs("PL-2", &[("P4", 2), ("P5", 2)]).unwrap()
    }

    fn iv(s: u64, e: u64) -> Interval {
        Interval::from_bounds(s, e).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(machine().period(), 8);
        assert_eq!(SequenceSpec::new("e", vec![]), Err(Error::EmptySequence));
        assert_eq!(
            SequenceSpec::from_pairs("a", &[("A", 0)]),
            Err(Error::NonPositiveDuration(0))
        );
        assert_eq!(validate(machine()).unwrap(), machine());
    }

    #[test]
    fn component_windows() {
        assert_eq!(machine().component_window(1).unwrap(), iv(5, 8));
        assert_eq!(weekday().component_window(2).unwrap(), iv(2, 3));
        assert_eq!(
            machine().component_window(2),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        );
    }

    #[test]
    fn unroll_examples() {
        assert_eq!(machine().unroll(1).intervals(), &[iv(0, 5), iv(5, 8)]);
        let w = weekday().unroll(2);
        assert_eq!(w.len(), 14);
        assert!(w
            .intervals()
            .iter()
            .enumerate()
            .all(|(k, i)| *i == iv(k as u64, k as u64 + 1)));
        assert_eq!(
            pl2().unroll(2).intervals(),
            &[iv(0, 2), iv(2, 4), iv(4, 6), iv(6, 8)]
        );
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            machine().incidences_of(1, 16).unwrap(),
            vec![iv(5, 8), iv(13, 16)]
        );
        let starts: Vec<u64> = weekday()
            .incidences_of(2, 56)
            .unwrap()
            .iter()
            .map(|i| i.start())
            .collect();
        assert_eq!(starts, vec![2, 9, 16, 23, 30, 37, 44, 51]);
        assert_eq!(pl2().incidences_of(1, 8).unwrap(), vec![iv(2, 4), iv(6, 8)]);
        assert_eq!(
            machine().incidences_of(1, 12),
            Err(Error::BadHorizon {
                horizon: 12,
                period: 8
            })
        );
        assert!(machine().incidences_of(4, 16).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_duration(&weekday(), &machine()), 56);
        let pl1 = SequenceSpec::from_durations("PL-1", &[3, 3, 2]).unwrap();
        assert_eq!(cycle_duration(&pl1, &pl2()), 8);
        assert_eq!(cycle_duration(&weekday(), &weekday()), 7);
    }

    #[test]
    fn unroll_tiles_and_excludes() {
        let spec = SequenceSpec::from_durations("s", &[2, 5, 1, 3]).unwrap();
        let tm = spec.unroll(3);
        assert_eq!(tm.intervals()[0].start(), 0);
        assert_eq!(cover_star(&tm).unwrap(), iv(0, 3 * spec.period()));
        for (a, i) in tm.intervals().iter().enumerate() {
            for (b, j) in tm.intervals().iter().enumerate() {
                if a != b {
                    assert!(holds(Derived::Disjoint, i, j));
                }
            }
        }
        assert_eq!(spec.incidences_of(0, spec.period()).unwrap()[0].start(), 0);
    }

    #[test]
    fn name_resolution() {
        assert_eq!(machine().resolve("Rest").unwrap(), 1);
        assert!(matches!(
            machine().resolve("Idle"),
            Err(Error::UnknownComponent { .. })
        ));
        let dup = SequenceSpec::from_pairs("d", &[("A", 1), ("A", 2)]).unwrap();
        assert!(matches!(
            dup.resolve("A"),
            Err(Error::AmbiguousComponent { .. })
        ));
    }

    #[test]
    fn deserialize_validates() {
        let ok: SequenceSpec =
            serde_json::from_str(r#"{"name":"m","components":[{"name":"W","dur":5}]}"#).unwrap();
        assert_eq!(ok.period(), 5);
        assert!(serde_json::from_str::<SequenceSpec>(r#"{"name":"m","components":[]}"#).is_err());
        assert!(serde_json::from_str::<SequenceSpec>(
            r#"{"name":"m","components":[{"name":"W","dur":0}]}"#
        )
        .is_err());
    }
}
