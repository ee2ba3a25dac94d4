//! Content-addressed result cache: one JSON file per key, written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use bmq_core::codec::serialize;
use bmq_core::diagram::Diagram;
use bmq_core::paths::PathSemantics;
use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

use crate::formats::DataVector;
use crate::report::Report;

/// Bumped whenever the report layout or any algorithm output changes.
const FORMAT: &str = "bmq-report-1";

pub fn cache_key(d: &Diagram, v: &DataVector, sem: PathSemantics) -> String {
    let mut h = Sha256::new();
    for part in [FORMAT, &serialize(d), &v.fingerprint(), &sem.to_string()] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored report, or `None` when absent or unreadable.
    pub fn get(&self, key: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Write to a temporary file in the cache directory, then rename over the
    /// final name, so readers never see a partial file.
    pub fn put(&self, key: &str, report: &Report) -> Result<()> {
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, report)?;
        tmp.flush()?;
        tmp.persist(self.path(key))?;
        Ok(())
    }
}
