//! Coincidence detection for two fixed-duration recurring sequences.
//!
//! Two sequences of back-to-back components repeat forever from a common
//! start. Given component `p` of `x` and component `q` of `y`, [`decide`]
//! answers whether their occurrences ever share positive time, in time linear
//! in the periods rather than quadratic. It works on the gcd slot grid
//! ([`GcdPartition`]): every slot of `x`'s period lines up with every slot of
//! `y`'s period exactly once per cycle, so only the slots each component
//! touches within a single period need to be compared.
//!
//! [`oracle`] holds the brute-force cycle projection used as ground truth.
//!
//! ```
//! use coincide::{decide, SequenceSpec};
//!
//! let weekday = SequenceSpec::from_durations("weekday", &[1; 7]).unwrap();
//! let machine = SequenceSpec::from_pairs("machine", &[("Working", 5), ("Rest", 3)]).unwrap();
//! let d = decide(&weekday, &machine, 2, 1).unwrap();
//! assert!(d.coincides);
//! ```
//!
//! See the crate's `examples/` directory for one runnable program per
//! capability.

pub mod bench;
pub mod cli;
pub mod coincidence;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod partition;
pub mod recurrence;
pub mod rng;

pub use coincidence::{
    audit_battery, check_pair, coincidence_windows, create_network, decide, decide_with_cost,
    fired_theorems, first_coincidence, network_for_period, slot_frame_window, Decision, Network,
    NetworkEntry, SlotFrameWindow, Theorem,
};
pub use error::{Error, Result};
pub use interval::{
    allen_relation, aux_intervals, common, cover, cover_star, holds, AuxEntry, Derived, Interval,
    Relation, TimeMap,
};
pub use oracle::{enumerate_coincidences, oracle_decide, OracleReport};
pub use partition::GcdPartition;
pub use recurrence::{cycle_duration, Component, SequenceSpec};
