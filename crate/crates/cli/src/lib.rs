//! Command implementations behind the `stabkit` binary.

pub mod character;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod plot;
pub mod verify;

pub use error::{CliError, CliResult};
