//! Weak unit interval representations: verification, the exact solver, the
//! grid oracle and threshold colorings.

pub mod oracle;
pub mod rep;
pub mod solver;

pub use oracle::{grid_oracle_interval, GridColoring, GridOutcome};
pub use rep::{to_threshold_coloring, verify_interval, IntervalRep, ThresholdColoring};
pub use solver::{
    decide_interval, decide_interval_with_orientation, find_hard_labelings, realize_orientation, FarDirection,
    FarOrientation, IntervalDecision, HARD_LABELING_MAX_EDGES,
};
