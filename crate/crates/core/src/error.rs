use thiserror::Error;

/// Errors raised by the interval, recurrence and coincidence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval duration must be at least 1 (got start {start}, end {end})")]
    EmptyInterval { start: u64, end: u64 },

    #[error("intervals {first} and {second} are disjoint; they have no common sub-interval")]
    DisjointIntervals { first: String, second: String },

    #[error("interval {first} does not meet {second}")]
    NotMeeting { first: String, second: String },

    #[error("time map is empty")]
    EmptyTimeMap,

    #[error("time map is not contiguous at position {index}")]
    NonContiguous { index: usize },

    #[error("auxiliary intervals are undefined for equal intervals")]
    EqualIntervals,

    #[error("sequence has no components")]
    EmptySequence,

    #[error("component {0} has a non-positive duration")]
    NonPositiveDuration(usize),

    #[error("index {index} is out of range (must be < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("horizon {horizon} is not a positive multiple of the period {period}")]
    BadHorizon { horizon: u64, period: u64 },

    #[error("slot duration {slot_dur} does not divide the period {period}")]
    BadGcd { slot_dur: u64, period: u64 },

    #[error("component window [{start}, {end}) does not overlap slot {slot}")]
    NoOverlap { start: u64, end: u64, slot: usize },

    #[error("no component named `{name}` in sequence `{sequence}`")]
    UnknownComponent { sequence: String, name: String },

    #[error("component name `{name}` is ambiguous in sequence `{sequence}`")]
    AmbiguousComponent { sequence: String, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
