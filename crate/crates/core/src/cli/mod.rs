//! Command-line layer: input files, reports, and one runner per subcommand.
//! The `tvlct` binary is a thin argument parser over this module.

pub mod commands;
pub mod report;
pub mod schema;

pub use commands::{check_variety, run, CliError, Command, Options};
pub use report::{Report, Verdict, REPORT_VERSION};
