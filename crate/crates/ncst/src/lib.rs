//! Command-line reports over `ncst-core`: one subcommand per experiment
//! family, CSV/JSON output, and a `verify` command that runs every
//! invariant suite.

pub mod cli;
pub mod commands;
pub mod report;
pub mod suites;
