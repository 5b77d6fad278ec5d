//! On-disk cache of straightened words, keyed by canonical word text.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uwf_core::algebra::{parse_word, word_to_string, Engine, Gen, Word, ENGINE_REVISION};
use uwf_core::coeffs::QRational;

pub const CACHE_DIR_VAR: &str = "WF_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    revision: u32,
    entries: BTreeMap<String, Vec<(String, QRational)>>,
}

fn path(dir: &Path) -> PathBuf {
    dir.join(format!("straighten-r{ENGINE_REVISION}.json"))
}

fn key(g: Gen, w: &[Gen]) -> String {
    format!("{g} | {}", word_to_string(w))
}

fn parse_key(k: &str) -> Option<(Gen, Word)> {
    let (g, w) = k.split_once(" | ")?;
    let g = *parse_word(g).ok()?.first()?;
    Some((g, parse_word(w).ok()?))
}

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_VAR).map(PathBuf::from)
}

/// Seeds the global engine; unreadable or stale files are ignored.
pub fn load(dir: &Path) -> usize {
    let Ok(text) = fs::read_to_string(path(dir)) else { return 0 };
    let Ok(file) = serde_json::from_str::<CacheFile>(&text) else { return 0 };
    if file.revision != ENGINE_REVISION {
        return 0;
    }
    let mut entries = Vec::new();
    for (k, v) in file.entries {
        let Some(k) = parse_key(&k) else { return 0 };
        let mut terms = Vec::new();
        for (w, c) in v {
            let Ok(w) = parse_word(&w) else { return 0 };
            terms.push((w, c));
        }
        entries.push((k, terms));
    }
    let n = entries.len();
    Engine::global().preload(entries);
    n
}

/// Writes the global engine's cache, replacing the file atomically.
pub fn save(dir: &Path) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entries = Engine::global()
        .cache_entries()
        .into_iter()
        .map(|((g, w), terms)| (key(g, &w), terms.into_iter().map(|(w, c)| (word_to_string(&w), c)).collect()))
        .collect();
    let text = serde_json::to_string(&CacheFile { revision: ENGINE_REVISION, entries })?;
    let target = path(dir);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(tmp, target)
}
