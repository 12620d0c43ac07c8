//! File formats and commands behind the `repherd` binary.

pub mod cache;
pub mod commands;
pub mod dot;
pub mod files;
pub mod report;
