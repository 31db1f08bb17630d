//! Command-line verification of class-number-one function fields: a curve
//! catalog, per-curve zeta pipelines, the 64-row quadric table and
//! deterministic reports.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod pipeline;
pub mod report;
pub mod selftest;

pub use error::{CliError, Outcome};
