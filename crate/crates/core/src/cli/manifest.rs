//! Run manifests: enough to re-run a command and check its outputs byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub config: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub versions: BTreeMap<String, String>,
    pub outputs: Vec<OutputDigest>,
    pub wall_time_s: f64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn digest_file(path: &Path) -> Result<OutputDigest> {
    let bytes = std::fs::read(path)?;
    Ok(OutputDigest {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
    })
}

pub fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([
        ("nconc".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("dense_engine".to_string(), "jacobi".to_string()),
        ("analytic_engine".to_string(), "free-fermion".to_string()),
    ])
}

impl RunManifest {
    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("manifest: {e}")))
    }

    /// The recorded arguments without the program name and without `--manifest`,
    /// so a replay does not overwrite the manifest it is checking.
    pub fn replay_args(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut it = self.command_line.iter().skip(1);
        while let Some(a) = it.next() {
            if a == "--manifest" {
                it.next();
            } else if !a.starts_with("--manifest=") {
                out.push(a.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn replay_args_drop_manifest() {
        let m = RunManifest {
            command_line: ["nconc", "sweep", "--manifest", "m.json", "--grid", "fig1", "--manifest=x"]
                .map(String::from)
                .to_vec(),
            config: BTreeMap::new(),
            seed: None,
            versions: versions(),
            outputs: vec![],
            wall_time_s: 0.0,
        };
        assert_eq!(m.replay_args(), vec!["sweep", "--grid", "fig1"]);
    }
}
