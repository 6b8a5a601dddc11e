//! Command-line front end for `bihom-core`: reads a JSON description of an
//! algebra, runs checks or cohomology computations and prints a report.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{parse_degrees, run_command, Command, Flags};
pub use document::{parse_input, parse_str, InputDocument};
pub use error::CliError;
pub use report::{Format, Report};
