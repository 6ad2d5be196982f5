//! Spec-file parsing, report formatting and verification sweeps for the
//! `circulant` command-line tool.

pub mod commands;
pub mod error;
pub mod report;
pub mod selftest;
pub mod spec_file;

pub use commands::{Flags, Output};
pub use error::{CliError, CliResult};
pub use spec_file::SpecFile;
