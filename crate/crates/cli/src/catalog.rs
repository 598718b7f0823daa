//! A directory of category files with an index of checksums.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use hgauss_core::moddata::PremodularData;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const INDEX: &str = "index.json";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub file: String,
    pub provenance: String,
    pub pseudounitary: bool,
    pub checksum: String,
    /// `category` for modular data files, `counting` for double counting tables.
    pub kind: String,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct Index {
    entries: Vec<CatalogEntry>,
}

pub struct Catalog {
    dir: PathBuf,
    index: Index,
}

pub fn checksum(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Catalog {
    pub fn open(dir: &Path) -> Result<Self> {
        let path = dir.join(INDEX);
        let index = if path.exists() {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        } else {
            Index::default()
        };
        Ok(Catalog { dir: dir.to_path_buf(), index })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.index.entries
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn save(&self) -> Result<()> {
        let mut text = serde_json::to_string_pretty(&self.index)?;
        text.push('\n');
        fs::write(self.dir.join(INDEX), text)?;
        Ok(())
    }

    fn put(&mut self, entry: CatalogEntry, contents: &str) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let path = self.dir.join(&entry.file);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        match self.index.entries.iter_mut().find(|e| e.file == entry.file) {
            Some(e) => *e = entry,
            None => self.index.entries.push(entry),
        }
        self.index.entries.sort_by(|a, b| a.file.cmp(&b.file));
        self.save()?;
        Ok(path)
    }

    pub fn write_category(&mut self, data: &PremodularData, file: &str) -> Result<PathBuf> {
        let text = data.to_json();
        let entry = CatalogEntry {
            name: data.name().to_string(),
            file: file.to_string(),
            provenance: data.provenance().to_string(),
            pseudounitary: data.pseudounitary(),
            checksum: checksum(text.as_bytes()),
            kind: "category".into(),
        };
        self.put(entry, &text)
    }

    pub fn write_counting(&mut self, name: &str, file: &str, provenance: &str, text: &str) -> Result<PathBuf> {
        let entry = CatalogEntry {
            name: name.to_string(),
            file: file.to_string(),
            provenance: provenance.to_string(),
            pseudounitary: false,
            checksum: checksum(text.as_bytes()),
            kind: "counting".into(),
        };
        self.put(entry, text)
    }

    /// Resolves a path as given, falling back to the catalog directory.
    pub fn resolve(&self, arg: &Path) -> Result<PathBuf> {
        if arg.exists() {
            return Ok(arg.to_path_buf());
        }
        let inside = self.dir.join(arg);
        if inside.exists() {
            return Ok(inside);
        }
        bail!("no such file: {} (also looked in {})", arg.display(), self.dir.display())
    }

    fn entry_for(&self, path: &Path) -> Option<&CatalogEntry> {
        let canon = fs::canonicalize(path).ok()?;
        self.index
            .entries
            .iter()
            .find(|e| fs::canonicalize(self.dir.join(&e.file)).ok().as_deref() == Some(canon.as_path()))
    }

    /// Reads a file, checking its checksum when the catalog indexes it.
    pub fn read(&self, arg: &Path) -> Result<(PathBuf, String)> {
        let path = self.resolve(arg)?;
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        if let Some(e) = self.entry_for(&path) {
            let sum = checksum(text.as_bytes());
            if sum != e.checksum {
                bail!("checksum mismatch for {}: index has {}, file has {}", path.display(), e.checksum, sum);
            }
        }
        Ok((path, text))
    }

    pub fn load(&self, arg: &Path) -> Result<PremodularData> {
        let (path, text) = self.read(arg)?;
        PremodularData::from_json(&text).with_context(|| format!("loading {}", path.display()))
    }
}
