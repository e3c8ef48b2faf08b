//! Decimal snapshots of closed-form constants.
//!
//! The file is advisory: each row carries the checksum of the recipe it was
//! computed from, and rows whose recipe has since changed are dropped on load.
//!
//! Layout: a header line, then one tab-separated row per entry,
//! `id  digits  checksum  decimal`, sorted by `(id, digits)`.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::closed_forms::{evaluate_closed_form, lookup};
use crate::error::{Error, Result};
use crate::precision::{to_decimal, Context};

/// Overrides the cache location.
pub const CACHE_ENV: &str = "SEPTICA_CACHE";

const HEADER: &str = "# septica constant cache v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantCacheEntry {
    pub id: String,
    pub digits: u32,
    pub decimal: String,
    pub checksum: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstantCache {
    entries: BTreeMap<(String, u32), ConstantCacheEntry>,
}

/// `$SEPTICA_CACHE`, else `$XDG_CACHE_HOME/septica/constants.tsv`,
/// else `~/.cache/septica/constants.tsv`.
pub fn default_cache_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(p));
    }
    let base = match std::env::var_os("XDG_CACHE_HOME") {
        Some(x) if !x.is_empty() => PathBuf::from(x),
        _ => PathBuf::from(std::env::var_os("HOME")?).join(".cache"),
    };
    Some(base.join("septica").join("constants.tsv"))
}

impl ConstantCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &ConstantCacheEntry> {
        self.entries.values()
    }

    pub fn insert(&mut self, entry: ConstantCacheEntry) {
        self.entries.insert((entry.id.clone(), entry.digits), entry);
    }

    /// The cached decimal for `id` at exactly `digits`, if its checksum is current.
    pub fn get(&self, id: &str, digits: u32) -> Option<&ConstantCacheEntry> {
        let e = self.entries.get(&(id.to_string(), digits))?;
        let current = lookup(id).ok()?.checksum();
        (e.checksum == current).then_some(e)
    }

    /// Returns the cached decimal or evaluates the registry entry and records it.
    pub fn get_or_compute(&mut self, id: &str, digits: u32) -> Result<String> {
        if let Some(e) = self.get(id, digits) {
            return Ok(e.decimal.clone());
        }
        let ctx = Context::new(digits)?;
        let decimal = to_decimal(&evaluate_closed_form(id, &ctx)?, digits);
        self.insert(ConstantCacheEntry {
            id: id.to_string(),
            digits,
            decimal: decimal.clone(),
            checksum: lookup(id)?.checksum(),
        });
        Ok(decimal)
    }

    /// Reads a cache file. A missing file is an empty cache; rows for
    /// unknown ids or with stale checksums are dropped.
    pub fn load(path: &Path) -> Result<Self> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Self::new()),
            Err(e) => return Err(e.into()),
        };
        Self::parse(&text)
    }

    fn parse(text: &str) -> Result<Self> {
        let mut cache = Self::new();
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected header `{HEADER}`"),
                })
            }
        }
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Parse { line: i + 1, message };
            let fields: Vec<&str> = line.split('\t').collect();
            let [id, digits, checksum, decimal] = fields[..] else {
                return Err(bad(format!("expected 4 tab-separated fields, found {}", fields.len())));
            };
            let digits: u32 = digits.parse().map_err(|_| bad(format!("bad digit count `{digits}`")))?;
            if checksum.len() != 64 || !checksum.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(bad("checksum must be 64 hex characters".into()));
            }
            if decimal.is_empty() || !decimal.bytes().all(|b| b.is_ascii_digit() || b == b'.' || b == b'-') {
                return Err(bad(format!("bad decimal `{decimal}`")));
            }
            let current = lookup(id).ok().map(|e| e.checksum());
            if current.as_deref() != Some(checksum) {
                continue;
            }
            cache.insert(ConstantCacheEntry {
                id: id.to_string(),
                digits,
                decimal: decimal.to_string(),
                checksum: checksum.to_string(),
            });
        }
        Ok(cache)
    }

    fn render(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        for e in self.entries.values() {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", e.id, e.digits, e.checksum, e.decimal));
        }
        out
    }

    /// Writes the cache atomically: the rows go to a sibling temp file which
    /// is renamed over `path` while an exclusive lock is held.
    pub fn store(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let lock_path = path.with_extension("lock");
        let lock = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(&lock_path)?;
        lock.lock()?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let result = (|| {
            let mut f = File::create(&tmp)?;
            f.write_all(self.render().as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, path)
        })();
        if result.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        lock.unlock()?;
        Ok(result?)
    }
}
