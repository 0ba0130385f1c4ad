//! Run directories: `<outdir>/<timestamp>-<seed>/` holding `manifest.json`
//! and the files it lists.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub timestamp: String,
    pub seed: u64,
    pub parameters: serde_json::Value,
    pub version: String,
    /// Output files, relative to the run directory.
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(timestamp: impl Into<String>, seed: u64, parameters: serde_json::Value, outputs: Vec<String>) -> Self {
        RunManifest {
            timestamp: timestamp.into(),
            seed,
            parameters,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outputs,
        }
    }
}

/// UTC timestamp used in run directory names, e.g. `20240501T120000Z`.
pub fn run_timestamp() -> String {
    chrono::Utc::now().format("%Y%m%dT%H%M%SZ").to_string()
}

/// A created run directory whose manifest is already on disk.
#[derive(Debug, Clone)]
pub struct RunDir {
    pub path: PathBuf,
    pub manifest: RunManifest,
}

impl RunDir {
    /// Create `<outdir>/<timestamp>-<seed>` (suffixed `.1`, `.2`, … if taken)
    /// and write the manifest into it before any output exists.
    pub fn create(outdir: impl AsRef<Path>, manifest: RunManifest) -> Result<Self> {
        let outdir = outdir.as_ref();
        std::fs::create_dir_all(outdir).map_err(|e| Error::io(outdir, e))?;
        let stem = format!("{}-{}", manifest.timestamp, manifest.seed);
        let mut path = outdir.join(&stem);
        let mut k = 0;
        loop {
            match std::fs::create_dir(&path) {
                Ok(()) => break,
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                    k += 1;
                    path = outdir.join(format!("{stem}.{k}"));
                }
                Err(e) => return Err(Error::io(&path, e)),
            }
        }
        let file = path.join("manifest.json");
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        text.push('\n');
        std::fs::write(&file, text).map_err(|e| Error::io(&file, e))?;
        Ok(RunDir { path, manifest })
    }

    pub fn file(&self, name: &str) -> PathBuf {
        self.path.join(name)
    }
}
