//! Command-line front end: loads probability-space files, builds density
//! matrices, evaluates trace-formula probabilities, replays the identity
//! suite, and runs seeded measurement experiments.

pub mod cli;
pub mod commands;
pub mod error;
pub mod report;
pub mod selector;
pub mod spec_file;
pub mod verify;

pub use cli::{Cli, Command, Format};
pub use commands::{run, RunOutcome};
pub use error::CliError;
