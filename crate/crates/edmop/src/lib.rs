//! File formats and the command-line front end for `edmop-core`.

pub mod cli;
pub mod config;
pub mod dot;
pub mod format;
pub mod graph6;
