//! On-disk cache of quotient characters: one JSON file per component at
//! `<root>/n=<n>/<a>_<b>_<c>.json`.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::coinvariants::{CharacterStore, QuotientCharacter};
use crate::combinatorics::Partition;
use crate::superring::{component_dim, TriDegree};

pub const CACHE_SCHEMA_VERSION: u32 = 1;

/// Identifies the algorithm that produced an entry.
pub const ENGINE_VERSION: &str = concat!("superdiag-", env!("CARGO_PKG_VERSION"), "-nf1");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub engine_version: String,
    pub n: usize,
    pub degree: [usize; 3],
    pub dim: usize,
    pub characters: BTreeMap<Partition, i64>,
}

impl CacheEntry {
    pub fn from_character(ch: &QuotientCharacter) -> Self {
        CacheEntry {
            schema_version: CACHE_SCHEMA_VERSION,
            engine_version: ENGINE_VERSION.to_string(),
            n: ch.n,
            degree: [ch.degree.a, ch.degree.b, ch.degree.c],
            dim: ch.dim,
            characters: ch.values.clone(),
        }
    }

    pub fn tri_degree(&self) -> TriDegree {
        TriDegree::new(self.degree[0], self.degree[1], self.degree[2])
    }

    pub fn is_current(&self) -> bool {
        self.schema_version == CACHE_SCHEMA_VERSION && self.engine_version == ENGINE_VERSION
    }

    pub fn to_character(&self) -> QuotientCharacter {
        let degree = self.tri_degree();
        QuotientCharacter {
            n: self.n,
            degree,
            ring_dim: component_dim(self.n, degree),
            dim: self.dim,
            values: self.characters.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CharacterCache {
    root: PathBuf,
}

impl CharacterCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        CharacterCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path(&self, n: usize, d: TriDegree) -> PathBuf {
        self.root
            .join(format!("n={n}"))
            .join(format!("{}_{}_{}.json", d.a, d.b, d.c))
    }

    /// A current, well-formed entry for `(n, d)`; anything else is a miss.
    pub fn read(&self, n: usize, d: TriDegree) -> Option<CacheEntry> {
        let bytes = fs::read(self.path(n, d)).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        let well_formed = entry.is_current()
            && entry.n == n
            && entry.tri_degree() == d
            && entry.characters.keys().all(|mu| mu.size() == n)
            && entry.characters.get(&Partition::column(n)) == Some(&(entry.dim as i64));
        well_formed.then_some(entry)
    }

    /// Writes through a temporary file in the target directory, then renames.
    pub fn write(&self, entry: &CacheEntry) -> io::Result<PathBuf> {
        let path = self.path(entry.n, entry.tri_degree());
        let dir = path.parent().expect("entry path has a parent");
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer_pretty(&mut tmp, entry)?;
        tmp.write_all(b"\n")?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }

    /// Write-then-read.
    pub fn roundtrip(&self, entry: &CacheEntry) -> io::Result<Option<CacheEntry>> {
        self.write(entry)?;
        Ok(self.read(entry.n, entry.tri_degree()))
    }
}

impl CharacterStore for CharacterCache {
    fn load(&self, n: usize, d: TriDegree) -> Option<QuotientCharacter> {
        self.read(n, d).map(|e| e.to_character())
    }

    fn store(&self, ch: &QuotientCharacter) {
        // a failed write only costs a recomputation later
        let _ = self.write(&CacheEntry::from_character(ch));
    }
}
