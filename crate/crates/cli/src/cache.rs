//! On-disk table cache: one JSON file per `(kind, n)` with a format-version
//! header. Corrupt, truncated or stale entries are ignored and recomputed,
//! never trusted.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use spinchar::characters::{CharacterTable, CharacterTableDto, TABLE_FORMAT_VERSION};
use spinchar::GroupKind;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    kind: String,
    table: CharacterTableDto,
}

pub fn cache_path(dir: &Path, kind: GroupKind) -> PathBuf {
    dir.join(format!("{}.table.json", kind.prefix()))
}

/// Loads a cached table; any inconsistency yields `None` (recompute).
pub fn cache_load(dir: &Path, kind: GroupKind) -> Option<Arc<CharacterTable>> {
    let path = cache_path(dir, kind);
    let raw = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&raw).ok()?;
    if file.format_version != TABLE_FORMAT_VERSION || file.kind != kind.prefix() {
        return None;
    }
    let table = CharacterTable::from_dto(file.table).ok()?;
    if table.kind != kind || table.check_degree_sum().is_err() {
        return None;
    }
    Some(Arc::new(table))
}

/// Stores a table; errors degrade to a warning on stderr.
pub fn cache_store(dir: &Path, table: &CharacterTable) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        format_version: TABLE_FORMAT_VERSION,
        kind: table.kind.prefix(),
        table: table.to_dto(),
    };
    let tmp = dir.join(format!(".{}.table.json.tmp", table.kind.prefix()));
    fs::write(&tmp, serde_json::to_string(&file).expect("serializable"))?;
    fs::rename(&tmp, cache_path(dir, table.kind))?;
    Ok(())
}
