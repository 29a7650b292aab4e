//! JSON interchange, rendering and the `swb` command line.

pub mod claims;
pub mod cli;
pub mod doc;
pub mod error;
pub mod render;

pub use cli::run;
pub use error::{CliError, Result};
