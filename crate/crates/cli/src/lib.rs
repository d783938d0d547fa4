//! Scenario-driven runner for the equiloc engine.

pub mod error;
pub mod run;
pub mod scenario;

pub use error::CliError;
pub use run::{run_scenario, run_text, Contribution, RunOptions, RunReport, Validation};
pub use scenario::{parse_scenario, Scenario};

/// The cone over a conic in `P^3`, in the rank-2 encoding of the weights
/// `(1, -1, 0, a)`.
pub const QUADRIC_SCENARIO: &str = include_str!("../scenarios/quadric.json");
