//! Output plumbing shared by the subcommands: content hashes, run manifests
//! and the small CSV tables.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use mesia_core::config::PipelineConfig;
use mesia_core::io::write_json;
use mesia_core::Result;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub fn sha256_file(path: &Path) -> Result<String> {
    Ok(hex::encode(Sha256::digest(fs::read(path)?)))
}

#[derive(Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

impl FileDigest {
    pub fn of(path: &Path) -> Result<Self> {
        Ok(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_file(path)?,
        })
    }
}

/// Provenance record written next to every output. It is the only artifact
/// carrying a timestamp, so data files stay byte-identical across runs.
#[derive(Serialize)]
pub struct Manifest {
    pub tool: String,
    pub command: String,
    pub created_unix: u64,
    pub config: PipelineConfig,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

impl Manifest {
    pub fn write(
        path: &Path,
        command: &str,
        config: &PipelineConfig,
        inputs: &[&Path],
        outputs: &[&Path],
    ) -> Result<()> {
        let digests = |paths: &[&Path]| paths.iter().map(|p| FileDigest::of(p)).collect::<Result<Vec<_>>>();
        let manifest = Manifest {
            tool: format!("mesia {}", env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            created_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            config: config.clone(),
            inputs: digests(inputs)?,
            outputs: digests(outputs)?,
        };
        write_json(path, &manifest)
    }
}

/// `scores.jsonl` -> `scores.jsonl.manifest.json`.
pub fn manifest_path_for(output: &Path) -> PathBuf {
    sibling(output, "manifest.json")
}

pub fn sibling(output: &Path, suffix: &str) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".");
    name.push(suffix);
    output.with_file_name(name)
}

pub fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    Ok(())
}

/// Minimal CSV writer for numeric tables; cells never need quoting.
pub struct Table {
    text: String,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        let mut text = header.join(",");
        text.push('\n');
        Table { text }
    }

    pub fn row(&mut self, cells: &[String]) {
        let _ = writeln!(self.text, "{}", cells.join(","));
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        ensure_parent(path)?;
        fs::write(path, &self.text)?;
        Ok(())
    }
}

pub fn opt_cell(value: Option<f64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}
