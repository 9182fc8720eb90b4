use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Tsv,
}

impl Format {
    fn delimiter(self) -> u8 {
        match self {
            Format::Csv => b',',
            Format::Tsv => b'\t',
        }
    }

    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Tsv => "tsv",
        }
    }
}

/// 17 significant digits; noise in `[-1e-10, 0)` and negative zero are
/// written as zero.
pub fn number(x: f64) -> String {
    let x = if (-1e-10..=0.0).contains(&x) { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Header plus rows of already-formatted cells.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Writes `<stem>.<csv|tsv>` into `dir` and returns the file name.
    pub fn write(&self, dir: &Path, stem: &str, format: Format) -> Result<String> {
        let name = format!("{stem}.{}", format.extension());
        let path = dir.join(&name);
        let mut w = csv::WriterBuilder::new()
            .delimiter(format.delimiter())
            .from_path(&path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush().with_context(|| format!("cannot write {}", path.display()))?;
        Ok(name)
    }

    /// Tab-separated copy on stdout; a closed pipe stops output quietly.
    pub fn print(&self) {
        let mut out = io::stdout().lock();
        let _ = std::iter::once(self.header.join("\t"))
            .chain(self.rows.iter().map(|r| r.join("\t")))
            .try_for_each(|line| writeln!(out, "{line}"));
    }
}

pub fn ensure_dir(dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create output directory {}", dir.display()))?;
    Ok(dir.to_path_buf())
}

/// Reproducibility sidecar; contains no timestamps so reruns are
/// byte-identical.
#[derive(Debug, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub rotation_constant: f64,
    pub grid_points: usize,
    pub format: Format,
    pub parameters: BTreeMap<&'static str, serde_json::Value>,
    pub files: Vec<String>,
}

impl Meta {
    pub fn write(&self, dir: &Path) -> Result<()> {
        let path = dir.join("meta.json");
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}
