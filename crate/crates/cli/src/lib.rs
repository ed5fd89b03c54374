//! Report rendering, golden files and subcommand implementations for the
//! `schoen` binary.

pub mod commands;
pub mod golden;
pub mod report;

pub use commands::CliError;
pub use report::{Check, Format, Mismatch, RunReport, Status};
