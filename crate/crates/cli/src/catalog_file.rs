//! TOML catalog files.
//!
//! ```toml
//! include_default = false
//!
//! [[group]]
//! name = "s3"
//! recipe = "symmetric(3)"
//!
//! [[group]]
//! name = "mine"
//! table = "tables/mine.txt"   # relative to the catalog file
//! ```

use std::path::{Path, PathBuf};

use indigraph_core::verify::{Catalog, CatalogEntry};
use serde::Deserialize;

use crate::cayley::import_cayley;
use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    #[serde(default)]
    include_default: bool,
    #[serde(default, rename = "group")]
    groups: Vec<FileEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileEntry {
    name: String,
    recipe: Option<String>,
    table: Option<PathBuf>,
}

pub fn parse_catalog(text: &str, path: &Path) -> CliResult<Catalog> {
    let bad = |reason: String| CliError::Catalog {
        path: path.to_path_buf(),
        reason,
    };
    let file: CatalogFile = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
    let mut catalog = if file.include_default {
        Catalog::default_catalog()
    } else {
        Catalog::new()
    };
    let base = path.parent().unwrap_or(Path::new("."));
    for g in file.groups {
        let entry = match (&g.recipe, &g.table) {
            (Some(r), None) => CatalogEntry::recipe(g.name.clone(), r).map_err(|e| bad(format!("{}: {e}", g.name)))?,
            (None, Some(t)) => CatalogEntry::table(g.name.clone(), import_cayley(&base.join(t))?),
            _ => return Err(bad(format!("{}: give exactly one of `recipe` and `table`", g.name))),
        };
        catalog.push(entry).map_err(|e| bad(e.to_string()))?;
    }
    Ok(catalog)
}

/// `default` or a path to a TOML catalog.
pub fn load_catalog(spec: &str) -> CliResult<Catalog> {
    if spec == "default" {
        return Ok(Catalog::default_catalog());
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_catalog(&text, path)
}
