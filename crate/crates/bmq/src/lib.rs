//! File formats, result cache, batch runs and move fuzzing around `bmq-core`.

pub mod cache;
pub mod formats;
pub mod fuzz;
pub mod report;
pub mod tabulate;

use std::path::{Path, PathBuf};

/// The corpus shipped with this crate.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}
