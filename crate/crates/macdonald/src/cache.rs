//! On-disk cache for the orthogonal-basis coefficient tables.
//!
//! The Gram-Schmidt output for each degree is written to a JSON file so
//! repeated runs skip the orthogonalization. Files are keyed by degree and
//! by a version string, so a code change that could alter the tables
//! invalidates old files by renaming rather than by deletion. The directory
//! is taken from the `QTKERN_CACHE` environment variable when set, else the
//! per-user data directory.

use std::path::PathBuf;

/// Bump this when the table format or the coefficients themselves change.
pub(crate) const TABLE_REV: &str = "1";

pub(crate) fn version_key() -> String {
    format!("{}r{}", env!("CARGO_PKG_VERSION"), TABLE_REV)
}

/// Directory holding cached tables. Honors `QTKERN_CACHE`; falls back to
/// the XDG data directory, then to a dot-directory under the home
/// directory, then to the working directory.
pub fn cache_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("QTKERN_CACHE") {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    if let Ok(xdg) = std::env::var("XDG_DATA_HOME") {
        if !xdg.is_empty() {
            return PathBuf::from(xdg).join("qtkern");
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return PathBuf::from(home).join(".local/share/qtkern");
        }
    }
    PathBuf::from(".qtkern-cache")
}

pub(crate) fn table_path(degree: u32) -> PathBuf {
    cache_dir().join(format!("p-tables-{}-deg{}.json", version_key(), degree))
}

/// Degrees with a cached table for the current version, ascending.
pub fn cached_degrees() -> Vec<u32> {
    let prefix = format!("p-tables-{}-deg", version_key());
    let mut out = Vec::new();
    let Ok(entries) = std::fs::read_dir(cache_dir()) else {
        return out;
    };
    for entry in entries.flatten() {
        let name = entry.file_name();
        let Some(name) = name.to_str() else { continue };
        let Some(rest) = name.strip_prefix(&prefix) else {
            continue;
        };
        if let Some(num) = rest.strip_suffix(".json") {
            if let Ok(n) = num.parse::<u32>() {
                out.push(n);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Removes every cached table file, current or stale. Returns how many
/// files were deleted; a missing cache directory counts as empty.
pub fn clear_cache() -> std::io::Result<usize> {
    let dir = cache_dir();
    let entries = match std::fs::read_dir(&dir) {
        Ok(e) => e,
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(err) => return Err(err),
    };
    let mut removed = 0;
    for entry in entries.flatten() {
        let name = entry.file_name();
        let Some(name) = name.to_str() else { continue };
        if name.starts_with("p-tables-") && name.ends_with(".json") {
            std::fs::remove_file(entry.path())?;
            removed += 1;
        }
    }
    Ok(removed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_paths_embed_degree_and_version() {
        let p = table_path(4);
        let name = p.file_name().unwrap().to_str().unwrap();
        assert!(name.starts_with("p-tables-"));
        assert!(name.contains("deg4"));
        assert!(name.ends_with(".json"));
    }
}
