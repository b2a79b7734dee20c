//! File format, reports and command bodies behind the `bihom` binary.

pub mod commands;
pub mod format;
pub mod report;
