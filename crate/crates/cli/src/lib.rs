//! Command-line front end for `aclus_core`: CSV loading, reports, and the
//! subcommands behind the `aclus` binary.

pub mod app;
pub mod load;
pub mod report;

pub use app::{run, Cli, CliError, Command, Format};
pub use load::{load_table, read_table, LoadError, LoadOptions};
pub use report::AnalysisReport;
