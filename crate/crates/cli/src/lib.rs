//! Command-line front-end for `cutspace`: file format, output renderings,
//! the benchmark harness and the `cutspace` binary's commands.

pub mod app;
pub mod bench;
pub mod error;
pub mod format;
pub mod output;

pub use error::{exit, CliError};
