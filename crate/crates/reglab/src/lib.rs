//! JSON formats, seeded fixtures, self-test suites and the command line for `reglab-core`.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod suites;

pub use error::CliError;
