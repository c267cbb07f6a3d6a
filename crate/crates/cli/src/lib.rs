//! Command-line front end and HTTP session server for `tilt-core`.

pub mod commands;
pub mod server;
pub mod session;

pub use commands::CliError;
