//! Experiment harness: configs, point-set generators, runs and reports.

pub mod config;
pub mod generate;
pub mod report;
pub mod run;

pub use config::ExperimentConfig;
pub use generate::{generate, Generator};
pub use report::{Finding, Report, SweepRow};
pub use run::{run, Command, Outcome};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(String),
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    #[error("i/o error: {0}")]
    Io(String),
}
