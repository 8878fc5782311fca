//! Command implementations behind the `leibniz` binary: document formats,
//! deterministic reports, and the individual checks. Kept as a library so
//! integration tests can drive commands directly.

pub mod commands;
pub mod document;
pub mod report;

/// Default seed for sampled selections (`"Leib"` in ASCII). Reports always
/// record the seed actually used.
pub const DEFAULT_SEED: u64 = 0x4c65_6962;

/// Default sample count for sampled selections.
pub const DEFAULT_SAMPLES: usize = 200;
