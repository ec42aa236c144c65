//! Scenario language, runner and report formats behind the `hgl` binary.

pub mod compile;
pub mod dsl;
pub mod gb;
pub mod report;
pub mod runner;
pub mod scenarios;
pub mod sequence_csv;

pub use dsl::{parse_scenario, DslError, ScenarioSpec};
pub use runner::{run_scenario, RunOptions, RunReport};
