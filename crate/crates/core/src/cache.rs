//! On-disk cache of polar profiles.
//!
//! A single JSON file, `polar-profiles.json`, inside the cache directory
//! (`$DETLINKS_CACHE`, else the platform cache directory plus `detlinks`).
//! Integers are stored as decimal strings. A file that fails to parse, has the
//! wrong version, or holds an entry of the wrong shape is ignored as a whole;
//! cached values are otherwise trusted unless the caller recomputes them.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polar::{top_index, PolarProfile};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_FILE_NAME: &str = "polar-profiles.json";
pub const CACHE_ENV: &str = "DETLINKS_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub values: Vec<String>,
    pub raw_signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    /// Keyed by `"m,n,r"`.
    pub entries: BTreeMap<String, CacheEntry>,
}

impl Default for CacheFile {
    fn default() -> Self {
        CacheFile {
            version: CACHE_VERSION,
            entries: BTreeMap::new(),
        }
    }
}

fn key(m: u32, n: u32, r: u32) -> String {
    format!("{m},{n},{r}")
}

fn parse_key(k: &str) -> Option<(u32, u32, u32)> {
    let mut it = k.split(',').map(|x| x.trim().parse::<u32>().ok());
    let out = (it.next()??, it.next()??, it.next()??);
    it.next().is_none().then_some(out)
}

impl CacheFile {
    pub fn insert(&mut self, p: &PolarProfile) {
        self.entries.insert(
            key(p.m, p.n, p.r),
            CacheEntry {
                values: p.values.iter().map(ToString::to_string).collect(),
                raw_signs: p.raw_signs.clone(),
            },
        );
    }

    pub fn from_profiles<'a>(profiles: impl IntoIterator<Item = &'a PolarProfile>) -> Self {
        let mut c = CacheFile::default();
        for p in profiles {
            c.insert(p);
        }
        c
    }

    pub fn get(&self, m: u32, n: u32, r: u32) -> Option<PolarProfile> {
        let e = self.entries.get(&key(m, n, r))?;
        decode(m, n, r, e).ok()
    }

    /// Decodes every entry; fails on the first malformed one.
    pub fn profiles(&self) -> std::result::Result<Vec<PolarProfile>, String> {
        self.entries
            .iter()
            .map(|(k, e)| {
                let (m, n, r) = parse_key(k).ok_or_else(|| format!("bad key '{k}'"))?;
                decode(m, n, r, e)
            })
            .collect()
    }
}

fn decode(m: u32, n: u32, r: u32, e: &CacheEntry) -> std::result::Result<PolarProfile, String> {
    if r > m || m > n || m == 0 {
        return Err(format!("entry {m},{n},{r} is not a valid profile key"));
    }
    let len = top_index(m, n, r) as usize + 1;
    if e.values.len() != len || e.raw_signs.len() != len {
        return Err(format!("entry {m},{n},{r} should have {len} values"));
    }
    let values = e
        .values
        .iter()
        .map(|v| {
            v.parse::<BigInt>()
                .ok()
                .filter(|x| x.sign() != num_bigint::Sign::Minus && v.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| format!("entry {m},{n},{r} has a malformed value '{v}'"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if e.raw_signs.iter().any(|s| !(-1..=1).contains(s)) {
        return Err(format!("entry {m},{n},{r} has a malformed sign"));
    }
    Ok(PolarProfile {
        m,
        n,
        r,
        values,
        raw_signs: e.raw_signs.clone(),
    })
}

/// `$DETLINKS_CACHE`, else `<platform cache dir>/detlinks`.
pub fn cache_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("detlinks")),
    }
}

pub fn cache_path() -> Option<PathBuf> {
    cache_dir().map(|d| d.join(CACHE_FILE_NAME))
}

/// What loading produced.
#[derive(Debug)]
pub enum Loaded {
    Missing,
    Ok(CacheFile),
    /// The file exists but cannot be trusted; the message says why.
    Ignored(String),
}

pub fn load(path: &Path) -> Loaded {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Loaded::Missing,
        Err(e) => return Loaded::Ignored(format!("unreadable: {e}")),
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return Loaded::Ignored(format!("corrupted: {e}")),
    };
    if file.version != CACHE_VERSION {
        return Loaded::Ignored(format!("version {} does not match {CACHE_VERSION}", file.version));
    }
    if let Err(e) = file.profiles() {
        return Loaded::Ignored(format!("corrupted: {e}"));
    }
    Loaded::Ok(file)
}

/// Writes the file atomically (temporary file plus rename).
pub fn store(path: &Path, file: &CacheFile) -> Result<()> {
    let err = |e: std::io::Error| Error::Cache {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(err)?;
    }
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp).map_err(err)?;
        let text = serde_json::to_string_pretty(file).expect("cache serializes");
        f.write_all(text.as_bytes()).map_err(err)?;
        f.write_all(b"\n").map_err(err)?;
    }
    fs::rename(&tmp, path).map_err(err)
}

/// Removes the cache file; a missing file is not an error.
pub fn clear(path: &Path) -> Result<bool> {
    match fs::remove_file(path) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(Error::Cache {
            path: path.to_path_buf(),
            message: e.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::polar_profile;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE_NAME);
        let p = (*polar_profile(3, 4, 2).unwrap()).clone();
        let file = CacheFile::from_profiles([&p]);
        store(&path, &file).unwrap();
        let Loaded::Ok(back) = load(&path) else {
            panic!("cache did not load")
        };
        assert_eq!(back, file);
        assert_eq!(back.get(3, 4, 2).unwrap(), p);
        assert_eq!(back.entries["3,4,2"].values, ["6", "16", "27", "24", "10", "0", "0"]);
    }

    #[test]
    fn rejects_bad_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE_NAME);
        assert!(matches!(load(&path), Loaded::Missing));
        fs::write(&path, "{ not json").unwrap();
        assert!(matches!(load(&path), Loaded::Ignored(_)));
        fs::write(&path, r#"{"version": 99, "entries": {}}"#).unwrap();
        assert!(matches!(load(&path), Loaded::Ignored(_)));
        fs::write(
            &path,
            r#"{"version": 1, "entries": {"2,3,1": {"values": ["3","4"], "raw_signs": [1,-1]}}}"#,
        )
        .unwrap();
        assert!(matches!(load(&path), Loaded::Ignored(_)));
        fs::write(
            &path,
            r#"{"version": 1, "entries": {"2,3,1": {"values": ["3","4","x","0"], "raw_signs": [1,-1,1,0]}}}"#,
        )
        .unwrap();
        assert!(matches!(load(&path), Loaded::Ignored(_)));
        assert!(clear(&path).unwrap());
        assert!(!clear(&path).unwrap());
    }
}
