//! Document formats and commands for the `freeperm` binary.

pub mod commands;
pub mod document;
pub mod error;
pub mod examples;
pub mod materialize;

pub use commands::{Format, Options, Outcome};
pub use document::{parse_document, to_json, Document};
pub use error::CliError;
