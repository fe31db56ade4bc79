//! Dataset hygiene and MESIA-driven partitioning.

mod dedup;
mod partition;
mod trainsets;

pub use dedup::{dedup, DedupEquality, DedupReport};
pub use partition::{bin_by_interval, interval_index, partition_ranked, Remainder, INTERVAL_EDGES};
pub use trainsets::{build_training_sets, TrainingSets};
