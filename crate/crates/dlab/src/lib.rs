//! Std companion to `dlab-core`: file formats, named checks and reports.

pub use dlab_core as core;

pub mod checks;
pub mod data;
pub mod formats;
pub mod report;
pub mod search;
