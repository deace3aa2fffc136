//! Command-line driver: parameter sweeps and two-mode experiments rendered
//! as CSV or JSON.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use args::Cli;
pub use commands::{run, Outcome};
pub use error::CliError;
