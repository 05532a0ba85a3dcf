//! On-disk copy of the Hadamard catalog.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use rmub::hadamard::{CatalogEntry, HadamardCatalog, CATALOG_LIMIT};

/// Overrides the catalog directory.
pub const CATALOG_DIR_ENV: &str = "RMUB_CATALOG_DIR";
pub const CATALOG_FILE: &str = "hadamard_catalog.json";

#[derive(Serialize, Deserialize)]
struct CatalogFile {
    version: u32,
    limit: usize,
    entries: BTreeMap<usize, CatalogEntry>,
}

pub fn catalog_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CATALOG_DIR_ENV) {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("rmub")
}

pub fn catalog_path() -> PathBuf {
    catalog_dir().join(CATALOG_FILE)
}

pub fn to_json(cat: &HadamardCatalog) -> String {
    let file = CatalogFile { version: 1, limit: CATALOG_LIMIT, entries: cat.to_entries() };
    let mut s = serde_json::to_string_pretty(&file).expect("catalog serializes");
    s.push('\n');
    s
}

fn read_existing() -> Option<HadamardCatalog> {
    let text = fs::read_to_string(catalog_path()).ok()?;
    let file: CatalogFile = serde_json::from_str(&text).ok()?;
    if file.version != 1 || file.limit != CATALOG_LIMIT {
        return None;
    }
    // rows are checked for order and admissibility; recipes verify when built
    HadamardCatalog::from_entries(&file.entries).ok()
}

/// Loads the persisted catalog, rebuilding and rewriting it when absent or stale.
pub fn load() -> HadamardCatalog {
    if let Some(cat) = read_existing() {
        return cat;
    }
    let cat = HadamardCatalog::build();
    let path = catalog_path();
    let written = path
        .parent()
        .map_or(Ok(()), fs::create_dir_all)
        .and_then(|_| fs::write(&path, to_json(&cat)));
    if let Err(e) = written {
        eprintln!("warning: could not write catalog to {}: {e}", path.display());
    }
    cat
}
