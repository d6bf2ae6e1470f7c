//! One JSON file per (command, parameters), named by the SHA-256 of the key.
//! Entries carry a schema version and the crate version; anything stale is
//! ignored and anything unreadable is recomputed with a warning.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    schema: u32,
    version: String,
    key: String,
    payload: Value,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    fn full_key(key: &str) -> String {
        format!("{key}|v{}", env!("CARGO_PKG_VERSION"))
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(Self::full_key(key).as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    pub fn get(&self, key: &str) -> Option<Value> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                eprintln!("warning: cannot read cache entry {}: {e}; recomputing", path.display());
                return None;
            }
        };
        match serde_json::from_str::<Entry>(&text) {
            Ok(entry) => {
                let fresh = entry.schema == SCHEMA_VERSION
                    && entry.version == env!("CARGO_PKG_VERSION")
                    && entry.key == Self::full_key(key);
                fresh.then_some(entry.payload)
            }
            Err(e) => {
                eprintln!("warning: corrupt cache entry {}: {e}; recomputing", path.display());
                None
            }
        }
    }

    /// Write-temp-then-rename; failures only warn.
    pub fn put(&self, key: &str, payload: &Value) {
        if let Err(e) = self.try_put(key, payload) {
            eprintln!("warning: cannot write cache entry: {e}");
        }
    }

    fn try_put(&self, key: &str, payload: &Value) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            schema: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            key: Self::full_key(key),
            payload: payload.clone(),
        };
        let target = self.path_for(key);
        let tmp = target.with_extension(format!("json.tmp.{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        assert!(cache.get("k").is_none());
        let v = serde_json::json!({"a": [1, 2]});
        cache.put("k", &v);
        assert_eq!(cache.get("k"), Some(v));
        assert!(cache.get("other").is_none());
        fs::write(cache.path_for("k"), "{not json").unwrap();
        assert!(cache.get("k").is_none());
    }

    #[test]
    fn stale_schema_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let entry = serde_json::json!({
            "schema": SCHEMA_VERSION + 1,
            "version": env!("CARGO_PKG_VERSION"),
            "key": Cache::full_key("k"),
            "payload": 5
        });
        fs::write(cache.path_for("k"), entry.to_string()).unwrap();
        assert!(cache.get("k").is_none());
    }
}
