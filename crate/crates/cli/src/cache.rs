//! On-disk catalog cache keyed by algebra digest and budget. Enabled by
//! setting `REPHERD_CACHE_DIR`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use repherd_core::algebra::BoundQuiverAlgebra;
use repherd_core::catalog::{Catalog, Entry};
use repherd_core::Budget;
use serde::{Deserialize, Serialize};

use crate::files::{FileError, ModuleFile};

pub const CACHE_ENV: &str = "REPHERD_CACHE_DIR";
const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedEntry {
    name: String,
    aliases: Vec<String>,
    projective: Option<usize>,
    injective: Option<usize>,
    simple: Option<usize>,
    module: ModuleFile,
}

#[derive(Serialize, Deserialize)]
struct CachedCatalog {
    version: u32,
    digest: String,
    budget: Budget,
    entries: Vec<CachedEntry>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    middle: Vec<Option<Vec<(usize, usize)>>>,
    complete: bool,
    hom: Vec<Vec<usize>>,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Cache> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(|d| Cache { dir: d.into() })
    }

    pub fn at(dir: &Path) -> Cache {
        Cache { dir: dir.into() }
    }

    fn path(&self, digest: &str, b: Budget) -> PathBuf {
        self.dir.join(format!("{digest}-{}-{}-{}.json", b.max_modules, b.max_total_dim, b.max_module_dim))
    }

    /// A missing, stale or unreadable entry is a miss.
    pub fn load(&self, alg: &BoundQuiverAlgebra, digest: &str, budget: Budget) -> Option<Catalog> {
        let text = fs::read_to_string(self.path(digest, budget)).ok()?;
        let c: CachedCatalog = serde_json::from_str(&text).ok()?;
        if c.version != CACHE_VERSION || c.digest != digest || c.budget != budget {
            return None;
        }
        let entries = c
            .entries
            .into_iter()
            .map(|e| {
                Ok(Entry {
                    module: e.module.build(alg)?,
                    name: e.name,
                    aliases: e.aliases,
                    projective: e.projective,
                    injective: e.injective,
                    simple: e.simple,
                })
            })
            .collect::<Result<Vec<_>, FileError>>()
            .ok()?;
        Some(Catalog { entries, tau: c.tau, tau_inv: c.tau_inv, middle: c.middle, complete: c.complete, hom: c.hom })
    }

    /// Write to a temporary file in the cache directory, then rename.
    pub fn store(&self, alg: &BoundQuiverAlgebra, digest: &str, budget: Budget, cat: &Catalog) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let c = CachedCatalog {
            version: CACHE_VERSION,
            digest: digest.into(),
            budget,
            entries: cat
                .entries
                .iter()
                .map(|e| CachedEntry {
                    name: e.name.clone(),
                    aliases: e.aliases.clone(),
                    projective: e.projective,
                    injective: e.injective,
                    simple: e.simple,
                    module: ModuleFile::of(alg, &e.module),
                })
                .collect(),
            tau: cat.tau.clone(),
            tau_inv: cat.tau_inv.clone(),
            middle: cat.middle.clone(),
            complete: cat.complete,
            hom: cat.hom.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&c).expect("plain data serializes").as_bytes())?;
        tmp.persist(self.path(digest, budget)).map_err(|e| e.error)?;
        Ok(())
    }
}
