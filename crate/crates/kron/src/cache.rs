//! Persistent coefficient cache and batch table generation.
//!
//! The cache is a JSON-lines file of [`CacheEntry`] records. Writes go
//! through a temp-file-and-rename, so a crash leaves the previous file
//! intact; one writer per file is assumed, readers are unrestricted.
//! Malformed lines are skipped with a warning and never abort a load.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use crate::characters::partitions_of;
use crate::coefficients::reduced_kronecker;
use crate::error::Error;
use crate::partition::Partition;

/// Identifies one cached coefficient: the family, the three partition
/// encodings, and the integer parameter for the families that take one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    /// One of `g`, `gbar`, `lr`, `mult`.
    pub kind: String,
    pub lam: String,
    pub mu: String,
    pub tau: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
}

impl CacheKey {
    pub fn gbar(lam: &Partition, mu: &Partition, tau: &Partition) -> Self {
        CacheKey {
            kind: "gbar".to_string(),
            lam: lam.to_string(),
            mu: mu.to_string(),
            tau: tau.to_string(),
            n: None,
        }
    }
}

/// One line of the cache file: a key plus the value as a decimal string, so
/// consumers need no assumption about integer width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub kind: String,
    pub lam: String,
    pub mu: String,
    pub tau: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub value: String,
}

impl CacheEntry {
    pub fn key(&self) -> CacheKey {
        CacheKey {
            kind: self.kind.clone(),
            lam: self.lam.clone(),
            mu: self.mu.clone(),
            tau: self.tau.clone(),
            n: self.n,
        }
    }
}

/// An in-memory view of one cache file, preserving line order so rewrites
/// are byte-stable.
pub struct CoeffCache {
    path: Option<PathBuf>,
    entries: Vec<CacheEntry>,
    index: HashMap<CacheKey, usize>,
}

impl CoeffCache {
    /// A cache with no backing file; [`persist`](Self::persist) is a no-op.
    pub fn in_memory() -> Self {
        CoeffCache {
            path: None,
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Loads a cache file. A missing file yields an empty cache; corrupt
    /// lines are skipped with a warning on standard error. When a key occurs
    /// on several lines the first occurrence wins.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, Error> {
        let path = path.into();
        let mut cache = CoeffCache {
            path: Some(path.clone()),
            entries: Vec::new(),
            index: HashMap::new(),
        };
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(err) => return Err(Error::io(format!("reading cache {}", path.display()), err)),
        };
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheEntry>(line) {
                Ok(entry) => cache.insert(entry),
                Err(err) => eprintln!(
                    "warning: skipping corrupt cache line {} of {}: {err}",
                    lineno + 1,
                    path.display()
                ),
            }
        }
        Ok(cache)
    }

    /// The stored value for a key, if any.
    pub fn get(&self, key: &CacheKey) -> Option<&str> {
        self.index
            .get(key)
            .map(|&at| self.entries[at].value.as_str())
    }

    /// Records an entry in memory. First occurrence of a key wins.
    pub fn insert(&mut self, entry: CacheEntry) {
        let key = entry.key();
        if self.index.contains_key(&key) {
            return;
        }
        self.index.insert(key, self.entries.len());
        self.entries.push(entry);
    }

    /// Records a key/value pair and persists the file atomically.
    pub fn put(&mut self, key: CacheKey, value: &BigInt) -> Result<(), Error> {
        self.insert(CacheEntry {
            kind: key.kind,
            lam: key.lam,
            mu: key.mu,
            tau: key.tau,
            n: key.n,
            value: value.to_string(),
        });
        self.persist()
    }

    /// Writes the whole cache to its backing file via temp-and-rename.
    pub fn persist(&self) -> Result<(), Error> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut text = String::new();
        for entry in &self.entries {
            text.push_str(&serde_json::to_string(entry).expect("entries are plain data"));
            text.push('\n');
        }
        write_atomically(path, text.as_bytes())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), Error> {
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".tmp");
    let tmp = PathBuf::from(tmp_name);
    let context = |what: &str| format!("{what} {}", tmp.display());
    let mut file =
        fs::File::create(&tmp).map_err(|e| Error::io(context("creating temp file"), e))?;
    file.write_all(bytes)
        .map_err(|e| Error::io(context("writing temp file"), e))?;
    file.sync_all()
        .map_err(|e| Error::io(context("syncing temp file"), e))?;
    drop(file);
    fs::rename(&tmp, path).map_err(|e| {
        Error::io(
            format!("renaming {} over {}", tmp.display(), path.display()),
            e,
        )
    })?;
    Ok(())
}

/// Writes the table of reduced coefficients with `|μ|, |τ| ≤ max_size` and
/// `|λ| ≤ |μ| + |τ|` as CSV rows `lambda,mu,tau,value`, zero values omitted.
/// Values already in the cache are reused; fresh ones are added to it.
/// Returns the number of data rows written.
///
/// Rows are emitted in a fixed order (sizes ascending, partitions
/// reverse-lexicographic within a size), so reruns produce byte-identical
/// files.
pub fn write_gbar_table<W: std::io::Write>(
    max_size: usize,
    out: W,
    cache: &mut CoeffCache,
) -> Result<u64, Error> {
    let shapes: Vec<Partition> = (0..=max_size).flat_map(partitions_of).collect();
    let mut writer = csv::Writer::from_writer(out);
    let io_err = |e: csv::Error| Error::io("writing table".to_string(), std::io::Error::other(e));
    writer
        .write_record(["lambda", "mu", "tau", "value"])
        .map_err(io_err)?;
    let mut rows = 0;
    for mu in &shapes {
        for tau in &shapes {
            for lam_size in 0..=mu.size() + tau.size() {
                for lam in partitions_of(lam_size) {
                    let key = CacheKey::gbar(&lam, mu, tau);
                    let value = match cache.get(&key) {
                        Some(stored) => stored.to_string(),
                        None => {
                            let computed = reduced_kronecker(&lam, mu, tau);
                            cache.insert(CacheEntry {
                                kind: key.kind.clone(),
                                lam: key.lam.clone(),
                                mu: key.mu.clone(),
                                tau: key.tau.clone(),
                                n: None,
                                value: computed.to_string(),
                            });
                            computed.to_string()
                        }
                    };
                    if value == "0" {
                        continue;
                    }
                    writer
                        .write_record([lam.to_string(), mu.to_string(), tau.to_string(), value])
                        .map_err(io_err)?;
                    rows += 1;
                }
            }
        }
    }
    writer.flush().map_err(|e| Error::io("flushing table", e))?;
    cache.persist()?;
    Ok(rows)
}

/// [`write_gbar_table`] into a file.
pub fn write_gbar_table_file(
    max_size: usize,
    path: impl AsRef<Path>,
    cache: &mut CoeffCache,
) -> Result<u64, Error> {
    let path = path.as_ref();
    let mut buffer = Vec::new();
    let rows = write_gbar_table(max_size, &mut buffer, cache)?;
    write_atomically(path, &buffer)?;
    Ok(rows)
}

/// The value of a cached kind computed fresh, for transparency checks and
/// for `put`-through paths in the CLI.
pub fn compute_for_key(key: &CacheKey) -> Result<BigInt, Error> {
    let lam: Partition = key.lam.parse()?;
    let mu: Partition = key.mu.parse()?;
    let tau: Partition = key.tau.parse()?;
    match (key.kind.as_str(), key.n) {
        ("gbar", None) => Ok(reduced_kronecker(&lam, &mu, &tau)),
        ("lr", None) => crate::coefficients::littlewood_richardson(&lam, &mu, &tau),
        ("g", Some(n)) => crate::coefficients::kronecker(
            &lam.add_top_row(n)?,
            &mu.add_top_row(n)?,
            &tau.add_top_row(n)?,
        ),
        ("g", None) => crate::coefficients::kronecker(&lam, &mu, &tau),
        ("mult", Some(n)) => crate::deligne::tensor_multiplicity(&mu, &tau, &lam, n),
        (kind, n) => Err(Error::Parse(format!(
            "cache key kind {kind:?} with n {n:?}"
        ))),
    }
}
