//! Trial batches, statistics, best known values and the exact oracle.

pub mod bks;
mod oracle;
pub mod report;
mod stats;

use num_rational::Ratio;

use crate::instance::Cost;

pub use oracle::{brute_force_optimum, ORACLE_MAX_COLUMNS};
pub use stats::{
    aggregate, run_once, run_trials, solution_from_cover, AlgoConfig, Algorithm, TrialStats,
};

/// Relative excess `(value - bks) / bks`.
pub fn gap(value: f64, bks: Cost) -> f64 {
    (value - bks as f64) / bks as f64
}

/// [`gap`] for integer values, exact.
pub fn gap_exact(value: Cost, bks: Cost) -> Ratio<i64> {
    Ratio::new(value as i64 - bks as i64, bks as i64)
}
