//! Command-line front end: job parsing, verdict reports in text and JSON,
//! the built-in reproduction corpus and oracle cross-check runs.

mod app;
pub mod config;
pub mod corpus;
pub mod report;

pub use app::run;
