//! Command-line driver: instance files, algorithm dispatch, oracle
//! verification, generators and benchmark tables.

pub mod commands;
pub mod error;
pub mod format;

pub use commands::{run, Cli};
pub use error::{CliError, CliResult};
