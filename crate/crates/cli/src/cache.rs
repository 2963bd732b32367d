//! On-disk cache of orbit posets, one JSON file per `(n, k)`.

use std::fs;
use std::path::{Path, PathBuf};

use linkpat::order::build_poset_capped;
use linkpat::{OrbitPoset, VERSION};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: String,
    poset: serde_json::Value,
}

/// How a poset was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Built,
    /// A cache file existed but was unreadable, stale or inconsistent.
    Rebuilt,
    Disabled,
}

pub fn cache_path(dir: &Path, n: usize, k: Option<usize>) -> PathBuf {
    let k = k.map_or_else(|| "all".to_string(), |k| k.to_string());
    dir.join(format!("poset-n{n}-k{k}.json"))
}

fn load(path: &Path, n: usize, k: Option<usize>) -> Option<OrbitPoset> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.version != VERSION {
        return None;
    }
    let poset = OrbitPoset::from_json(&file.poset.to_string()).ok()?;
    (poset.n == n && poset.k == k).then_some(poset)
}

/// Returns the poset for `(n, k)`, reading or refreshing the cache when a
/// directory is given.
pub fn poset(
    dir: Option<&Path>,
    n: usize,
    k: Option<usize>,
    cap: usize,
) -> Result<(OrbitPoset, CacheStatus), CliError> {
    if n > cap {
        return Err(linkpat::Error::ResourceCap { n, cap }.into());
    }
    let Some(dir) = dir else {
        return Ok((build_poset_capped(n, k, cap)?, CacheStatus::Disabled));
    };
    let path = cache_path(dir, n, k);
    let existed = path.exists();
    if existed {
        if let Some(poset) = load(&path, n, k) {
            return Ok((poset, CacheStatus::Hit));
        }
    }
    let poset = build_poset_capped(n, k, cap)?;
    let file = CacheFile {
        version: VERSION.to_string(),
        poset: serde_json::from_str(&poset.to_json())?,
    };
    let io = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    fs::write(&path, serde_json::to_string(&file)?).map_err(io)?;
    let status = if existed { CacheStatus::Rebuilt } else { CacheStatus::Built };
    Ok((poset, status))
}
