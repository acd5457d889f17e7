//! File formats, parallel scans and the command-line front end for
//! [`eil_core`].

pub mod cli;
pub mod format;
pub mod g6file;
pub mod scan;

pub use eil_core;

/// Tool version reported in JSON output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
