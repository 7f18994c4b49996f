//! File formats and the command-line front end for `fockbridge-core`.

pub mod config;
pub mod error;
pub mod json;
pub mod render;
pub mod session;

pub use config::{CliConfig, OutputFormat, RepSpec};
pub use error::{CliError, CliResult};
pub use session::{load, read_bundle, Outcome, Session, Suite, Which};
