//! BLEU for generated comments, per sentence, per corpus and per MESIA group.
//!
//! Sentence BLEU smooths the n >= 2 precisions as `(matches + 1) / (total + 1)`.
//! Corpus BLEU sums clipped matches, n-gram totals and lengths over all pairs
//! before taking precisions and the brevity penalty, and is unsmoothed: any
//! order without matches gives 0.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::GroupPartition;

pub const DEFAULT_MAX_N: usize = 4;

/// Which score is reported as the headline BLEU.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BleuVariant {
    #[default]
    Corpus,
    SentenceSmoothed,
}

/// Clipped n-gram matches and candidate n-gram totals for orders `1..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct NgramStats {
    matches: Vec<u64>,
    totals: Vec<u64>,
    cand_len: u64,
    ref_len: u64,
}

impl NgramStats {
    fn zero(max_n: usize) -> Self {
        NgramStats {
            matches: vec![0; max_n],
            totals: vec![0; max_n],
            cand_len: 0,
            ref_len: 0,
        }
    }

    fn collect<S: AsRef<str>>(candidate: &[S], reference: &[S], max_n: usize) -> Self {
        let mut stats = NgramStats::zero(max_n);
        stats.cand_len = candidate.len() as u64;
        stats.ref_len = reference.len() as u64;
        for n in 1..=max_n {
            let cand = ngram_counts(candidate, n);
            let refs = ngram_counts(reference, n);
            stats.totals[n - 1] = cand.values().sum();
            stats.matches[n - 1] = cand
                .iter()
                .map(|(g, &c)| c.min(refs.get(g).copied().unwrap_or(0)))
                .sum();
        }
        stats
    }

    fn add(&mut self, other: &NgramStats) {
        for (a, b) in self.matches.iter_mut().zip(&other.matches) {
            *a += b;
        }
        for (a, b) in self.totals.iter_mut().zip(&other.totals) {
            *a += b;
        }
        self.cand_len += other.cand_len;
        self.ref_len += other.ref_len;
    }

    fn brevity_penalty(&self) -> f64 {
        if self.cand_len >= self.ref_len {
            1.0
        } else {
            (1.0 - self.ref_len as f64 / self.cand_len as f64).exp()
        }
    }

    fn score(&self, smooth: bool) -> f64 {
        if self.cand_len == 0 || self.matches[0] == 0 {
            return 0.0;
        }
        let max_n = self.matches.len();
        let mut log_sum = 0.0;
        for n in 0..max_n {
            let (m, t) = (self.matches[n], self.totals[n]);
            let p = if smooth && n > 0 {
                (m + 1) as f64 / (t + 1) as f64
            } else if m == 0 {
                return 0.0;
            } else {
                m as f64 / t as f64
            };
            log_sum += p.ln();
        }
        self.brevity_penalty() * (log_sum / max_n as f64).exp()
    }
}

fn ngram_counts<S: AsRef<str>>(tokens: &[S], n: usize) -> HashMap<Vec<&str>, u64> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            let key: Vec<&str> = window.iter().map(AsRef::as_ref).collect();
            *counts.entry(key).or_default() += 1;
        }
    }
    counts
}

/// Smoothed sentence BLEU of one candidate against one reference.
pub fn sentence_bleu<S: AsRef<str>>(candidate: &[S], reference: &[S], max_n: usize) -> Result<f64> {
    if reference.is_empty() {
        return Err(Error::EmptyReference);
    }
    Ok(NgramStats::collect(candidate, reference, max_n).score(true))
}

/// Corpus BLEU over all candidates. Every candidate id needs a reference;
/// references without a candidate are ignored.
pub fn corpus_bleu(
    candidates: &BTreeMap<String, Vec<String>>,
    references: &BTreeMap<String, Vec<String>>,
    max_n: usize,
) -> Result<f64> {
    let mut total = NgramStats::zero(max_n);
    for (id, cand) in candidates {
        let reference = references
            .get(id)
            .ok_or_else(|| Error::MissingReference(id.clone()))?;
        if reference.is_empty() {
            return Err(Error::EmptyReference);
        }
        total.add(&NgramStats::collect(cand, reference, max_n));
    }
    Ok(total.score(false))
}

/// BLEU of one group of a partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupBleu {
    /// One-based group number.
    pub group: usize,
    pub size: usize,
    pub mean_mesia: Option<f64>,
    pub corpus_bleu: f64,
    /// Mean of smoothed sentence BLEU over the group.
    pub sentence_bleu: f64,
}

/// Corpus and mean sentence BLEU of every group, in group order. Empty groups
/// score 0.
pub fn bleu_per_group(
    candidates: &BTreeMap<String, Vec<String>>,
    references: &BTreeMap<String, Vec<String>>,
    partition: &GroupPartition,
    max_n: usize,
) -> Result<Vec<GroupBleu>> {
    let mut rows = Vec::with_capacity(partition.len());
    for (g, members) in partition.groups.iter().enumerate() {
        let mut group_cands = BTreeMap::new();
        let mut sentence_sum = 0.0;
        for id in members {
            let reference = references
                .get(id)
                .ok_or_else(|| Error::MissingReference(id.clone()))?;
            let cand = candidates
                .get(id)
                .ok_or_else(|| Error::MissingCandidate(id.clone()))?;
            sentence_sum += sentence_bleu(cand, reference, max_n)?;
            group_cands.insert(id.clone(), cand.clone());
        }
        let size = members.len();
        rows.push(GroupBleu {
            group: g + 1,
            size,
            mean_mesia: partition.mean_mesia.get(g).copied().flatten(),
            corpus_bleu: corpus_bleu(&group_cands, references, max_n)?,
            sentence_bleu: if size == 0 { 0.0 } else { sentence_sum / size as f64 },
        });
    }
    Ok(rows)
}
