//! Data types shared by every pipeline stage.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A method and its comment, the atomic dataset record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeCommentPair {
    pub id: String,
    pub code: String,
    pub comment: String,
}

impl CodeCommentPair {
    /// Builds a pair, rejecting comments that are blank after trimming.
    pub fn new(
        id: impl Into<String>,
        code: impl Into<String>,
        comment: impl Into<String>,
    ) -> Result<Self> {
        let pair = CodeCommentPair {
            id: id.into(),
            code: code.into(),
            comment: comment.into(),
        };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        if self.comment.trim().is_empty() {
            return Err(Error::InvalidPair {
                id: self.id.clone(),
                reason: "comment is empty".into(),
            });
        }
        Ok(())
    }
}

/// The reader-visible interface of a method.
///
/// Parameter types are stored as base identifiers: generic arguments and
/// array brackets are stripped, so `List<Entry>[]` becomes `List`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub name: String,
    pub param_names: Vec<String>,
    pub param_types: Vec<String>,
    /// `None` for constructors and `void` methods.
    pub return_type: Option<String>,
}

/// Normalized view of a pair used for scoring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedPair {
    pub id: String,
    /// Lowercased comment tokens before stemming, parallel to `comment_tokens`.
    /// Stop-word tests run against these.
    pub surface_tokens: Vec<String>,
    /// Stemmed comment tokens in original order, stop words included.
    pub comment_tokens: Vec<String>,
    /// Stems of the split signature identifiers.
    pub signature_tokens: BTreeSet<String>,
    pub raw_comment_len: usize,
}

/// Word-frequency table over all comment tokens of a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawStats", into = "RawStats")]
pub struct CorpusStats {
    freq: BTreeMap<String, u64>,
    total: u64,
}

#[derive(Serialize, Deserialize)]
struct RawStats {
    total: u64,
    vocab_size: usize,
    freq: BTreeMap<String, u64>,
}

impl TryFrom<RawStats> for CorpusStats {
    type Error = Error;

    fn try_from(raw: RawStats) -> Result<Self> {
        let stats = CorpusStats::from_counts(raw.freq)?;
        if stats.total != raw.total || stats.vocab_size() != raw.vocab_size {
            return Err(Error::Config(format!(
                "stats header says total={} vocab={}, counts give total={} vocab={}",
                raw.total,
                raw.vocab_size,
                stats.total,
                stats.vocab_size()
            )));
        }
        Ok(stats)
    }
}

impl From<CorpusStats> for RawStats {
    fn from(stats: CorpusStats) -> Self {
        RawStats {
            total: stats.total,
            vocab_size: stats.freq.len(),
            freq: stats.freq,
        }
    }
}

impl CorpusStats {
    /// Builds stats from explicit counts. Zero counts are rejected, and at
    /// least one word is required.
    pub fn from_counts(freq: BTreeMap<String, u64>) -> Result<Self> {
        if let Some((word, _)) = freq.iter().find(|(_, &c)| c == 0) {
            return Err(Error::Config(format!("word `{word}` has zero count")));
        }
        let total: u64 = freq.values().sum();
        if total == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(CorpusStats { freq, total })
    }

    pub fn freq(&self, word: &str) -> u64 {
        self.freq.get(word).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn vocab_size(&self) -> usize {
        self.freq.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.freq.iter().map(|(w, &c)| (w.as_str(), c))
    }
}

/// Per-pair information quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MesiaScore {
    /// Information the comment adds beyond the signature.
    pub info_total: f64,
    /// Information of the comment ignoring the signature.
    pub info_unconditioned: f64,
    /// `info_total / raw_comment_len`.
    pub mesia: f64,
    pub raw_comment_len: usize,
    /// Tokens left after removing stop words and signature words.
    pub remaining_count: usize,
    pub remaining_proportion: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Validation,
    Test,
}

impl Split {
    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Validation => "validation",
            Split::Test => "test",
        }
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(Split::Train),
            "valid" | "validation" | "dev" => Ok(Split::Validation),
            "test" => Ok(Split::Test),
            other => Err(Error::Config(format!("unknown split `{other}`"))),
        }
    }
}

/// An ordered collection of pairs with unique ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDataset")]
pub struct Dataset {
    split: Split,
    pairs: Vec<CodeCommentPair>,
}

#[derive(Deserialize)]
struct RawDataset {
    split: Split,
    pairs: Vec<CodeCommentPair>,
}

impl TryFrom<RawDataset> for Dataset {
    type Error = Error;

    fn try_from(raw: RawDataset) -> Result<Self> {
        Dataset::new(raw.split, raw.pairs)
    }
}

impl Dataset {
    pub fn new(split: Split, pairs: Vec<CodeCommentPair>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(pairs.len());
        for pair in &pairs {
            if !seen.insert(pair.id.as_str()) {
                return Err(Error::DuplicateId(pair.id.clone()));
            }
            pair.validate()?;
        }
        Ok(Dataset { split, pairs })
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn pairs(&self) -> &[CodeCommentPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn into_pairs(self) -> Vec<CodeCommentPair> {
        self.pairs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    IntervalBins,
    RankDeciles,
}

/// Assignment of scored ids to ordered groups.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupPartition {
    pub kind: PartitionKind,
    pub groups: Vec<Vec<String>>,
    /// Lower bin edges for interval bins; the last bin is unbounded above.
    pub boundaries: Option<Vec<f64>>,
    /// Mean MESIA of each group, `None` for an empty group.
    pub mean_mesia: Vec<Option<f64>>,
    /// Ids left out to make rank groups equally sized.
    #[serde(default)]
    pub dropped: Vec<String>,
}

impl GroupPartition {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    /// Index of the group holding `id`.
    pub fn group_of(&self, id: &str) -> Option<usize> {
        self.groups
            .iter()
            .position(|g| g.iter().any(|member| member == id))
    }
}
