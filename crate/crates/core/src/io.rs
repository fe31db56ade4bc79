//! File formats: datasets, text records, score tables.
//!
//! Datasets are JSON lines with `code` and `comment` fields and an optional
//! `id`, or CSV with the same column names. Missing ids become
//! `<split>-<line>`. Loads are all-or-nothing: the first bad record aborts
//! with its line number.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CodeCommentPair, Dataset, MesiaScore, Split};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    Jsonl,
    Csv,
}

impl DatasetFormat {
    /// `.csv` files are CSV, everything else JSON lines.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => DatasetFormat::Csv,
            _ => DatasetFormat::Jsonl,
        }
    }
}

#[derive(Deserialize)]
struct PairRecord {
    id: Option<String>,
    code: String,
    comment: String,
}

#[derive(Serialize)]
struct PairRecordOut<'a> {
    id: &'a str,
    code: &'a str,
    comment: &'a str,
}

fn to_pair(record: PairRecord, split: Split, line: usize) -> Result<CodeCommentPair> {
    let id = record.id.unwrap_or_else(|| format!("{split}-{line}"));
    CodeCommentPair::new(id, record.code, record.comment).map_err(|e| Error::Parse {
        line,
        reason: e.to_string(),
    })
}

fn nonblank_lines(path: &Path) -> Result<Vec<(usize, String)>> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push((i + 1, line));
        }
    }
    Ok(lines)
}

pub fn load_dataset(path: impl AsRef<Path>, format: DatasetFormat, split: Split) -> Result<Dataset> {
    let path = path.as_ref();
    let pairs = match format {
        DatasetFormat::Jsonl => parse_jsonl_pairs(path, split)?,
        DatasetFormat::Csv => parse_csv_pairs(path, split)?,
    };
    Dataset::new(split, pairs)
}

fn parse_jsonl_pairs(path: &Path, split: Split) -> Result<Vec<CodeCommentPair>> {
    nonblank_lines(path)?
        .into_iter()
        .map(|(line, text)| {
            let record: PairRecord = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line,
                reason: e.to_string(),
            })?;
            to_pair(record, split, line)
        })
        .collect()
}

fn parse_csv_pairs(path: &Path, split: Split) -> Result<Vec<CodeCommentPair>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_error(e, 1))?;
    let mut pairs = Vec::new();
    for record in reader.deserialize::<PairRecord>() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            csv_error(e, line)
        })?;
        let line = pairs.len() + 2;
        pairs.push(to_pair(record, split, line)?);
    }
    Ok(pairs)
}

fn csv_error(e: csv::Error, line: usize) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Parse {
            line,
            reason: format!("{other:?}"),
        },
    }
}

/// Writes a dataset as JSON lines with explicit ids.
pub fn write_dataset(path: impl AsRef<Path>, dataset: &Dataset) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for pair in dataset.pairs() {
        let record = PairRecordOut {
            id: &pair.id,
            code: &pair.code,
            comment: &pair.comment,
        };
        serde_json::to_writer(&mut out, &record).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Deserialize)]
struct TextRecord {
    id: Option<String>,
    text: Option<String>,
    comment: Option<String>,
}

/// Loads `{id, text}` records. A `comment` field is accepted in place of
/// `text`, so dataset files can serve as references. Missing ids become
/// `<id_prefix>-<line>`.
pub fn load_texts(path: impl AsRef<Path>, id_prefix: &str) -> Result<IndexMap<String, String>> {
    let mut texts = IndexMap::new();
    for (line, raw) in nonblank_lines(path.as_ref())? {
        let record: TextRecord = serde_json::from_str(&raw).map_err(|e| Error::Parse {
            line,
            reason: e.to_string(),
        })?;
        let text = record.text.or(record.comment).ok_or_else(|| Error::Parse {
            line,
            reason: "record has neither `text` nor `comment`".into(),
        })?;
        let id = record.id.unwrap_or_else(|| format!("{id_prefix}-{line}"));
        if texts.insert(id.clone(), text).is_some() {
            return Err(Error::DuplicateId(id));
        }
    }
    Ok(texts)
}

#[derive(Serialize, Deserialize)]
struct ScoreRecord {
    id: String,
    #[serde(flatten)]
    score: MesiaScore,
}

pub fn write_scores<'a, I>(path: impl AsRef<Path>, scores: I) -> Result<()>
where
    I: IntoIterator<Item = (&'a String, &'a MesiaScore)>,
{
    let mut out = BufWriter::new(File::create(path)?);
    for (id, score) in scores {
        let record = ScoreRecord {
            id: id.clone(),
            score: *score,
        };
        serde_json::to_writer(&mut out, &record).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn load_scores(path: impl AsRef<Path>) -> Result<IndexMap<String, MesiaScore>> {
    let mut scores = IndexMap::new();
    for (line, raw) in nonblank_lines(path.as_ref())? {
        let record: ScoreRecord = serde_json::from_str(&raw).map_err(|e| Error::Parse {
            line,
            reason: e.to_string(),
        })?;
        if scores.insert(record.id.clone(), record.score).is_some() {
            return Err(Error::DuplicateId(record.id));
        }
    }
    Ok(scores)
}

/// Reads a JSON document.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: impl AsRef<Path>) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        reason: e.to_string(),
    })
}

/// Writes pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::from)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
