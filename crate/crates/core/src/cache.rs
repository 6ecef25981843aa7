//! Content-addressed fixture cache rooted at `$TFORGE_CACHE`.
//!
//! Objects live in `objects/<sha256>.json`; names map to hashes through
//! `refs/<name>`. Writes go through a temporary file and a rename, and every
//! load re-hashes the object.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const ENV_VAR: &str = "TFORGE_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o at {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("object {0} does not match its hash")]
    Corrupt(String),
    #[error("invalid JSON in {0}")]
    Json(String),
    #[error("invalid name {0:?}")]
    BadName(String),
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CacheError + '_ {
    move |source| CacheError::Io { path: path.to_path_buf(), source }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CacheError> {
    let dir = path.parent().expect("cache paths have a parent");
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let tmp = dir.join(format!(".tmp-{}-{}", std::process::id(), sha256_hex(bytes)));
    let mut f = fs::File::create(&tmp).map_err(io_err(&tmp))?;
    f.write_all(bytes).map_err(io_err(&tmp))?;
    f.sync_all().map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

impl Cache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Cache { root: root.into() }
    }

    /// The cache named by `$TFORGE_CACHE`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn check_name(name: &str) -> Result<(), CacheError> {
        let ok = !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || "-_.".contains(c));
        if ok && !name.starts_with('.') {
            Ok(())
        } else {
            Err(CacheError::BadName(name.into()))
        }
    }

    /// Stores `value` and points `name` at it; returns the object hash.
    pub fn put(&self, name: &str, value: &Value) -> Result<String, CacheError> {
        Self::check_name(name)?;
        let bytes = serde_json::to_vec(value).expect("JSON values serialize");
        let hash = sha256_hex(&bytes);
        let obj = self.root.join("objects").join(format!("{hash}.json"));
        if !obj.exists() {
            write_atomic(&obj, &bytes)?;
        }
        write_atomic(&self.root.join("refs").join(name), hash.as_bytes())?;
        Ok(hash)
    }

    /// Loads the object `name` points to, or `None` if there is no such ref.
    pub fn get(&self, name: &str) -> Result<Option<(Value, String)>, CacheError> {
        Self::check_name(name)?;
        let r = self.root.join("refs").join(name);
        let hash = match fs::read_to_string(&r) {
            Ok(h) => h.trim().to_string(),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CacheError::Io { path: r, source: e }),
        };
        let obj = self.root.join("objects").join(format!("{hash}.json"));
        let bytes = fs::read(&obj).map_err(io_err(&obj))?;
        if sha256_hex(&bytes) != hash {
            return Err(CacheError::Corrupt(hash));
        }
        let v = serde_json::from_slice(&bytes).map_err(|_| CacheError::Json(hash.clone()))?;
        Ok(Some((v, hash)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn tmp(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("tforge-cache-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&d);
        d
    }

    #[test]
    fn roundtrip_and_corruption() {
        let c = Cache::new(tmp("rt"));
        assert!(c.get("x").unwrap().is_none());
        let h = c.put("x", &json!({"a": 1})).unwrap();
        assert_eq!(c.get("x").unwrap().unwrap(), (json!({"a": 1}), h.clone()));
        fs::write(c.root().join("objects").join(format!("{h}.json")), b"{\"a\":2}").unwrap();
        assert!(matches!(c.get("x"), Err(CacheError::Corrupt(_))));
        let _ = fs::remove_dir_all(c.root());
    }

    #[test]
    fn names_are_validated() {
        let c = Cache::new(tmp("names"));
        assert!(matches!(c.put("../x", &json!(1)), Err(CacheError::BadName(_))));
        assert!(matches!(c.get(".hidden"), Err(CacheError::BadName(_))));
    }
}
