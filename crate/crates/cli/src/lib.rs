//! Command-line front end for `doxa-core`.

pub mod args;
pub mod commands;
pub mod registry;

pub use args::Cli;
pub use commands::{run, Output};
