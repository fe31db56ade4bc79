//! Word statistics and the information measures built on them.
//!
//! Every comment word `w` has probability `freq(w) / total` over the comment
//! corpus. Its information is `-log p`. Conditioning on the signature sets
//! `p = 1` for words that also occur in the split signature, so those words
//! carry no information. MESIA is the conditioned information divided by the
//! comment length.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexer::{Lexer, StopWordList};
use crate::model::{CodeCommentPair, CorpusStats, MesiaScore, TokenizedPair};

/// Logarithm base for information quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum LogBase {
    /// Bits.
    #[default]
    #[serde(rename = "2")]
    Two,
    /// Nats.
    #[serde(rename = "e")]
    E,
}

impl LogBase {
    /// `-log(p)` in this base.
    pub fn information(self, p: f64) -> f64 {
        match self {
            LogBase::Two => -p.log2(),
            LogBase::E => -p.ln(),
        }
    }
}

/// Counts comment tokens over all pairs.
pub fn build_word_stats<'a, I>(pairs: I) -> Result<CorpusStats>
where
    I: IntoIterator<Item = &'a TokenizedPair>,
{
    count_tokens(pairs.into_iter().map(|p| p.comment_tokens.as_slice()))
}

/// Counts tokens from any sequence of token lists.
pub fn count_tokens<'a, I>(token_lists: I) -> Result<CorpusStats>
where
    I: IntoIterator<Item = &'a [String]>,
{
    let mut freq: HashMap<&str, u64> = HashMap::new();
    for tokens in token_lists {
        for t in tokens {
            *freq.entry(t.as_str()).or_default() += 1;
        }
    }
    if freq.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let freq: BTreeMap<String, u64> = freq.into_iter().map(|(w, c)| (w.to_string(), c)).collect();
    CorpusStats::from_counts(freq)
}

/// `freq(w) / total`, or `1 / (total + vocab_size)` for a word the corpus
/// never saw.
pub fn word_probability(word: &str, stats: &CorpusStats) -> f64 {
    match stats.freq(word) {
        0 => 1.0 / (stats.total() + stats.vocab_size() as u64) as f64,
        f => f as f64 / stats.total() as f64,
    }
}

pub fn conditional_probability(
    word: &str,
    signature_tokens: &BTreeSet<String>,
    stats: &CorpusStats,
) -> f64 {
    if signature_tokens.contains(word) {
        1.0
    } else {
        word_probability(word, stats)
    }
}

/// Information carried by a comment, with and without the signature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommentInformation {
    pub conditioned: f64,
    pub unconditioned: f64,
}

pub fn comment_information(
    pair: &TokenizedPair,
    stats: &CorpusStats,
    base: LogBase,
) -> Result<CommentInformation> {
    if pair.comment_tokens.is_empty() {
        return Err(Error::EmptyComment(pair.id.clone()));
    }
    let mut info = CommentInformation {
        conditioned: 0.0,
        unconditioned: 0.0,
    };
    for w in &pair.comment_tokens {
        let p = word_probability(w, stats);
        let bits = base.information(p);
        info.unconditioned += bits;
        if !pair.signature_tokens.contains(w) {
            info.conditioned += bits;
        }
    }
    Ok(info)
}

/// Number of comment tokens that are neither stop words nor signature words.
pub fn remaining_count(pair: &TokenizedPair, stops: &StopWordList) -> usize {
    pair.surface_tokens
        .iter()
        .zip(&pair.comment_tokens)
        .filter(|(surface, stemmed)| {
            !stops.contains(surface) && !pair.signature_tokens.contains(*stemmed)
        })
        .count()
}

/// Why a comment token was removed in the remaining-words analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenRole {
    StopWord,
    Signature,
    Remaining,
}

/// Per-token classification behind [`remaining_count`]. Stop words take
/// precedence over signature words.
pub fn classify_tokens(pair: &TokenizedPair, stops: &StopWordList) -> Vec<(String, TokenRole)> {
    pair.surface_tokens
        .iter()
        .zip(&pair.comment_tokens)
        .map(|(surface, stemmed)| {
            let role = if stops.contains(surface) {
                TokenRole::StopWord
            } else if pair.signature_tokens.contains(stemmed) {
                TokenRole::Signature
            } else {
                TokenRole::Remaining
            };
            (surface.clone(), role)
        })
        .collect()
}

pub fn mesia(
    pair: &TokenizedPair,
    stats: &CorpusStats,
    stops: &StopWordList,
    base: LogBase,
) -> Result<MesiaScore> {
    if pair.raw_comment_len == 0 {
        return Err(Error::EmptyComment(pair.id.clone()));
    }
    let info = comment_information(pair, stats, base)?;
    let len = pair.raw_comment_len as f64;
    let remaining = remaining_count(pair, stops);
    Ok(MesiaScore {
        info_total: info.conditioned,
        info_unconditioned: info.unconditioned,
        mesia: info.conditioned / len,
        raw_comment_len: pair.raw_comment_len,
        remaining_count: remaining,
        remaining_proportion: remaining as f64 / len,
    })
}

/// A pair that could not be scored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreFailure {
    pub id: String,
    pub kind: String,
    pub message: String,
}

/// Scores of a batch in input order, plus the pairs that failed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScoreReport {
    pub scores: IndexMap<String, MesiaScore>,
    pub failures: Vec<ScoreFailure>,
}

impl ScoreReport {
    /// `(id, mesia)` in input order.
    pub fn mesia_values(&self) -> impl Iterator<Item = (&str, f64)> {
        self.scores.iter().map(|(id, s)| (id.as_str(), s.mesia))
    }
}

/// Everything needed to score pairs against a frozen corpus.
#[derive(Debug, Clone)]
pub struct Scorer<'a> {
    pub lexer: Lexer,
    pub stats: &'a CorpusStats,
    pub stops: &'a StopWordList,
    pub base: LogBase,
}

impl Scorer<'_> {
    pub fn score_pair(&self, pair: &CodeCommentPair) -> Result<MesiaScore> {
        let tokenized = self.lexer.tokenize_pair(pair)?;
        mesia(&tokenized, self.stats, self.stops, self.base)
    }

    /// Scores every pair. Failures are collected rather than aborting; the
    /// output order follows the input order. Runs on the current rayon pool.
    pub fn score_dataset(&self, pairs: &[CodeCommentPair]) -> ScoreReport {
        let results: Vec<(&str, Result<MesiaScore>)> = pairs
            .par_iter()
            .map(|p| (p.id.as_str(), self.score_pair(p)))
            .collect();
        let mut report = ScoreReport::default();
        for (id, result) in results {
            match result {
                Ok(score) => {
                    report.scores.insert(id.to_string(), score);
                }
                Err(e) => report.failures.push(ScoreFailure {
                    id: id.to_string(),
                    kind: e.kind().to_string(),
                    message: e.to_string(),
                }),
            }
        }
        report
    }
}
