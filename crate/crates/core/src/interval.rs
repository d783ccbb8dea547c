//! Exact integer interval arithmetic.
//!
//! Intervals are half-open `[start, end)` spans over integer time units with a
//! duration of at least one unit, so two intervals *meet* exactly when one
//! ends where the other starts. The thirteen basic relations follow Allen's
//! interval algebra; the derived relations (`disjoint`, `within`, `sub`,
//! `samebegin`) are fixed disjunctions of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A half-open span `[start, start + dur)` with `dur >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Bounds", try_from = "Bounds")]
pub struct Interval {
    start: u64,
    dur: u64,
}

/// Wire form of an [`Interval`]: `{"start": .., "end": ..}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct Bounds {
    start: u64,
    end: u64,
}

impl From<Interval> for Bounds {
    fn from(i: Interval) -> Self {
        Bounds {
            start: i.start,
            end: i.end(),
        }
    }
}

impl TryFrom<Bounds> for Interval {
    type Error = Error;

    fn try_from(b: Bounds) -> Result<Self> {
        Interval::from_bounds(b.start, b.end)
    }
}

impl Interval {
    pub fn new(start: u64, dur: u64) -> Result<Self> {
        if dur == 0 {
            return Err(Error::EmptyInterval { start, end: start });
        }
        Ok(Interval { start, dur })
    }

    /// Builds `[start, end)`; fails unless `end > start`.
    pub fn from_bounds(start: u64, end: u64) -> Result<Self> {
        if end <= start {
            return Err(Error::EmptyInterval { start, end });
        }
        Ok(Interval {
            start,
            dur: end - start,
        })
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn end(&self) -> u64 {
        self.start + self.dur
    }

    pub fn dur(&self) -> u64 {
        self.dur
    }

    /// Same interval moved `by` units later.
    pub fn shifted(&self, by: u64) -> Interval {
        Interval {
            start: self.start + by,
            dur: self.dur,
        }
    }

    pub fn relation_to(&self, other: &Interval) -> Relation {
        allen_relation(self, other)
    }

    /// Positive-length intersection, if any.
    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let lo = self.start.max(other.start);
        let hi = self.end().min(other.end());
        (hi > lo).then(|| Interval {
            start: lo,
            dur: hi - lo,
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end())
    }
}

/// Allen's thirteen basic relations, read as `first REL second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Before,
    After,
    Meets,
    MetBy,
    Overlaps,
    OverlappedBy,
    Starts,
    StartedBy,
    During,
    Contains,
    Finishes,
    FinishedBy,
    Equals,
}

impl Relation {
    pub const ALL: [Relation; 13] = [
        Relation::Before,
        Relation::After,
        Relation::Meets,
        Relation::MetBy,
        Relation::Overlaps,
        Relation::OverlappedBy,
        Relation::Starts,
        Relation::StartedBy,
        Relation::During,
        Relation::Contains,
        Relation::Finishes,
        Relation::FinishedBy,
        Relation::Equals,
    ];

    /// The relation that holds with the arguments swapped.
    pub fn inverse(self) -> Relation {
        use Relation::*;
        match self {
            Before => After,
            After => Before,
            Meets => MetBy,
            MetBy => Meets,
            Overlaps => OverlappedBy,
            OverlappedBy => Overlaps,
            Starts => StartedBy,
            StartedBy => Starts,
            During => Contains,
            Contains => During,
            Finishes => FinishedBy,
            FinishedBy => Finishes,
            Equals => Equals,
        }
    }

    pub fn name(self) -> &'static str {
        use Relation::*;
        match self {
            Before => "before",
            After => "after",
            Meets => "meets",
            MetBy => "met-by",
            Overlaps => "overlaps",
            OverlappedBy => "overlapped-by",
            Starts => "starts",
            StartedBy => "started-by",
            During => "during",
            Contains => "contains",
            Finishes => "finishes",
            FinishedBy => "finished-by",
            Equals => "equals",
        }
    }

    /// True when `first` contains `second` or equals it, i.e. `second sub first`.
    pub fn is_super(self) -> bool {
        matches!(
            self,
            Relation::Equals | Relation::StartedBy | Relation::FinishedBy | Relation::Contains
        )
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relations defined as disjunctions of the basic ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Derived {
    /// before, after, meets, met-by. Meeting intervals share no time.
    Disjoint,
    /// starts, finishes, during (a proper sub-interval).
    Within,
    /// `within` or equals.
    Sub,
    /// starts, started-by, equals.
    SameBegin,
}

impl Derived {
    pub fn members(self) -> &'static [Relation] {
        use Relation::*;
        match self {
            Derived::Disjoint => &[Before, After, Meets, MetBy],
            Derived::Within => &[Starts, Finishes, During],
            Derived::Sub => &[Starts, Finishes, During, Equals],
            Derived::SameBegin => &[Starts, StartedBy, Equals],
        }
    }
}

pub fn allen_relation(i: &Interval, j: &Interval) -> Relation {
    use std::cmp::Ordering::*;
    use Relation::*;

    let (is, ie, js, je) = (i.start(), i.end(), j.start(), j.end());
    if ie < js {
        return Before;
    }
    if je < is {
        return After;
    }
    if ie == js {
        return Meets;
    }
    if je == is {
        return MetBy;
    }
    match (is.cmp(&js), ie.cmp(&je)) {
        (Equal, Equal) => Equals,
        (Equal, Less) => Starts,
        (Equal, Greater) => StartedBy,
        (Greater, Equal) => Finishes,
        (Less, Equal) => FinishedBy,
        (Greater, Less) => During,
        (Less, Greater) => Contains,
        (Less, Less) => Overlaps,
        (Greater, Greater) => OverlappedBy,
    }
}

pub fn holds(d: Derived, i: &Interval, j: &Interval) -> bool {
    d.members().contains(&allen_relation(i, j))
}

/// The maximal common sub-interval of two non-disjoint intervals.
pub fn common(i: &Interval, j: &Interval) -> Result<Interval> {
    i.intersection(j).ok_or_else(|| Error::DisjointIntervals {
        first: i.to_string(),
        second: j.to_string(),
    })
}

/// The union of `i` and `j` when `i` meets `j`.
pub fn cover(i: &Interval, j: &Interval) -> Result<Interval> {
    if allen_relation(i, j) != Relation::Meets {
        return Err(Error::NotMeeting {
            first: i.to_string(),
            second: j.to_string(),
        });
    }
    Ok(Interval {
        start: i.start,
        dur: i.dur + j.dur,
    })
}

/// An ordered run of intervals, each expected to meet the next.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TimeMap(Vec<Interval>);

impl TimeMap {
    pub fn new(intervals: Vec<Interval>) -> Self {
        TimeMap(intervals)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_contiguous(&self) -> bool {
        self.0.windows(2).all(|w| w[0].end() == w[1].start())
    }

    pub fn cover(&self) -> Result<Interval> {
        cover_star(self)
    }
}

impl From<Vec<Interval>> for TimeMap {
    fn from(v: Vec<Interval>) -> Self {
        TimeMap(v)
    }
}

/// The single interval covered by a contiguous time map.
pub fn cover_star(tm: &TimeMap) -> Result<Interval> {
    let first = tm.0.first().ok_or(Error::EmptyTimeMap)?;
    if let Some(index) = tm.0.windows(2).position(|w| w[0].end() != w[1].start()) {
        return Err(Error::NonContiguous { index });
    }
    let last = tm.0.last().unwrap_or(first);
    Interval::from_bounds(first.start(), last.end())
}

/// An auxiliary interval together with its relations to the two operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxEntry {
    pub aux: Interval,
    pub rel_to_first: Relation,
    pub rel_to_second: Relation,
}

impl AuxEntry {
    fn between(aux: Interval, i: &Interval, j: &Interval) -> Self {
        AuxEntry {
            aux,
            rel_to_first: allen_relation(&aux, i),
            rel_to_second: allen_relation(&aux, j),
        }
    }
}

/// Gap intervals relating `i` and `j`.
///
/// Overlapping pairs yield the non-common prefix and suffix (zero, one or two
/// entries); pairs separated by a gap yield that gap; meeting pairs yield
/// nothing. Equal intervals are rejected.
pub fn aux_intervals(i: &Interval, j: &Interval) -> Result<Vec<AuxEntry>> {
    if i == j {
        return Err(Error::EqualIntervals);
    }
    let mut out = Vec::with_capacity(2);
    if holds(Derived::Disjoint, i, j) {
        let (earlier, later) = if i.end() <= j.start() { (i, j) } else { (j, i) };
        if let Ok(gap) = Interval::from_bounds(earlier.end(), later.start()) {
            out.push(AuxEntry::between(gap, i, j));
        }
        return Ok(out);
    }
    let (s_lo, s_hi) = (i.start.min(j.start), i.start.max(j.start));
    if let Ok(prefix) = Interval::from_bounds(s_lo, s_hi) {
        out.push(AuxEntry::between(prefix, i, j));
    }
    let (e_lo, e_hi) = (i.end().min(j.end()), i.end().max(j.end()));
    if let Ok(suffix) = Interval::from_bounds(e_lo, e_hi) {
        out.push(AuxEntry::between(suffix, i, j));
    }
    Ok(out)
}
