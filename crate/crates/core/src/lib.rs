//! Supplementary-information scoring for method-level code comments.
//!
//! A comment is scored by how much information it carries beyond the words a
//! reader can already see in the method signature. Each comment word costs
//! `-log p(w)` where `p(w)` is its relative frequency over all comments in the
//! corpus, and words that also appear in the split signature cost nothing.
//! The per-token mean of that quantity is the MESIA score.
//!
//! The crate is organised along the processing pipeline:
//!
//! - [`lexer`]: signature extraction, identifier splitting, comment
//!   tokenization, stop words and Porter stemming.
//! - [`mesia`]: corpus statistics and the information measures.
//! - [`dataset`]: deduplication, interval binning, rank partitioning and
//!   training-set construction.
//! - [`bleu`]: sentence and corpus BLEU, overall and per group.
//! - [`io`] and [`config`]: file formats and pipeline configuration.

pub mod bleu;
pub mod config;
pub mod dataset;
pub mod error;
pub mod io;
pub mod lexer;
pub mod mesia;
pub mod model;

pub use error::{Error, Result};
pub use model::{
    CodeCommentPair, CorpusStats, Dataset, GroupPartition, MesiaScore, PartitionKind, Signature,
    Split, TokenizedPair,
};
