//! Command-line front end and HTTP game service for `permdek-core`.

pub mod commands;
pub mod service;

pub use commands::run;
