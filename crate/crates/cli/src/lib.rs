//! Command-line surface for `fibform-core`: single-prime commands, output
//! formatting, and the resumable batch scanner.

pub mod commands;
pub mod error;
pub mod output;
pub mod record;
pub mod scan;

pub use commands::{run, Cli, Command, Outcome};
pub use error::CliError;
pub use output::Format;
pub use record::{ResultRecord, SCHEMA_VERSION};
pub use scan::{read_cache, scan, ScanOptions, ScanSummary};
