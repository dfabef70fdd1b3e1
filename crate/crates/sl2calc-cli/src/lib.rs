//! Verification harness for `sl2calc`.
//!
//! The harness groups executable identities into suites (`nilhecke`,
//! `symfun`, `grassmannian`, `udot`, `partitions`), runs them in parallel and
//! renders an order-stable report as a text table or as JSON. The `sl2calc`
//! binary is a thin command-line front end over this crate.

pub mod check;
pub mod config;
pub mod report;
pub mod suites;
pub mod tables;

pub use check::{Check, Outcome, Params};
pub use config::{Format, Suite, SuiteConfig};
pub use report::{CheckReport, Status, SuiteReport};
pub use suites::run_suite;

use thiserror::Error;

/// Errors surfaced to the command line. All of them are usage errors and map
/// to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite `{0}` (expected nilhecke, symfun, grassmannian, udot, partitions or all)")]
    UnknownSuite(String),

    #[error("{name} = {value} exceeds the hard cap {cap}")]
    AboveCap { name: &'static str, value: i64, cap: i64 },

    #[error("{name} must be at least {min}, got {value}")]
    BelowMinimum { name: &'static str, value: i64, min: i64 },

    #[error("cannot read config file {path}: {source}")]
    ConfigIo { path: String, source: std::io::Error },

    #[error("invalid config file {path}: {source}")]
    ConfigParse { path: String, source: toml::de::Error },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot start worker pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
