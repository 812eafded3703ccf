//! Append-only JSON-lines cache of guessing-number results, keyed by
//! canonical graph6 form and alphabet size.
//!
//! Saturation and extremal searches evaluate many isomorphic graphs (every
//! `G + e` across an enumeration); the cache collapses those to one
//! computation. The file format is one JSON object per line, append-only, so
//! interrupted runs lose at most the line being written.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

/// What is known about `gn(G, s)` for one isomorphism class:
/// `s^(n - cp) <= max code size <= s^(n - alpha)`, plus the exact size when
/// it has been computed (or when the bounds already pin it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnRecord {
    pub g6: String,
    pub s: u32,
    pub n: usize,
    pub cp: usize,
    pub alpha: usize,
    pub exact: Option<u64>,
}

#[derive(Debug)]
pub struct GnCache {
    map: HashMap<(String, u32), GnRecord>,
    path: Option<PathBuf>,
    hits: u64,
    misses: u64,
}

impl GnCache {
    /// Purely in-memory cache.
    pub fn in_memory() -> GnCache {
        GnCache { map: HashMap::new(), path: None, hits: 0, misses: 0 }
    }

    /// File-backed cache; loads existing entries and appends new ones.
    pub fn at_path(path: impl AsRef<Path>) -> Result<GnCache> {
        let path = path.as_ref().to_path_buf();
        let mut map = HashMap::new();
        if path.exists() {
            let file = File::open(&path)
                .map_err(|e| Error::invalid(format!("cannot open cache {}: {e}", path.display())))?;
            for (lineno, line) in BufReader::new(file).lines().enumerate() {
                let line = line
                    .map_err(|e| Error::invalid(format!("cannot read cache {}: {e}", path.display())))?;
                if line.trim().is_empty() {
                    continue;
                }
                let record: GnRecord = serde_json::from_str(&line).map_err(|e| {
                    Error::invalid(format!(
                        "malformed cache line {} in {}: {e}",
                        lineno + 1,
                        path.display()
                    ))
                })?;
                map.insert((record.g6.clone(), record.s), record);
            }
        }
        Ok(GnCache { map, path: Some(path), hits: 0, misses: 0 })
    }

    pub fn lookup(&mut self, g6: &str, s: u32) -> Option<GnRecord> {
        let found = self.map.get(&(g6.to_string(), s)).cloned();
        if found.is_some() {
            self.hits += 1;
        } else {
            self.misses += 1;
        }
        found
    }

    pub fn store(&mut self, record: GnRecord) -> Result<()> {
        if let Some(path) = &self.path {
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::invalid(format!("cannot append to cache {}: {e}", path.display())))?;
            let line = serde_json::to_string(&record)
                .map_err(|e| Error::internal(format!("cache serialization failed: {e}")))?;
            writeln!(file, "{line}")
                .map_err(|e| Error::invalid(format!("cannot write cache {}: {e}", path.display())))?;
        }
        self.map.insert((record.g6.clone(), record.s), record);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// (hits, misses) since construction.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits, self.misses)
    }
}
