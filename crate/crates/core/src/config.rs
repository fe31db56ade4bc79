//! Pipeline configuration, loaded from TOML.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bleu::BleuVariant;
use crate::dataset::{DedupEquality, Remainder};
use crate::error::{Error, Result};
use crate::lexer::{AcronymRule, Lexer, StopWordList};
use crate::mesia::LogBase;

/// Probability assigned to words missing from the corpus statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Smoothing {
    /// `1 / (total + vocab_size)`.
    #[default]
    AddVocab,
}

/// Side of the rank order that loses the remainder when groups must be equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DropSide {
    #[default]
    High,
    Low,
}

impl DropSide {
    pub fn remainder(self) -> Remainder {
        match self {
            DropSide::High => Remainder::High,
            DropSide::Low => Remainder::Low,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub log_base: LogBase,
    /// Stop-word file; the bundled list is used when absent.
    pub stopword_path: Option<PathBuf>,
    pub signature_types_in_code: bool,
    pub acronym_rule: AcronymRule,
    pub dedup_equality: DedupEquality,
    pub drop_remainder_side: DropSide,
    pub bleu_variant: BleuVariant,
    /// Stem tokens before computing BLEU.
    pub bleu_stemmed: bool,
    pub smoothing: Smoothing,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            log_base: LogBase::Two,
            stopword_path: None,
            signature_types_in_code: true,
            acronym_rule: AcronymRule::PluralAware,
            dedup_equality: DedupEquality::Raw,
            drop_remainder_side: DropSide::High,
            bleu_variant: BleuVariant::Corpus,
            bleu_stemmed: false,
            smoothing: Smoothing::AddVocab,
        }
    }
}

impl PipelineConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn lexer(&self) -> Lexer {
        Lexer {
            acronym_rule: self.acronym_rule,
            include_types: self.signature_types_in_code,
        }
    }

    pub fn stop_words(&self) -> Result<StopWordList> {
        match &self.stopword_path {
            Some(path) => StopWordList::load(path)
                .map_err(|e| Error::Config(format!("stop words {}: {e}", path.display()))),
            None => Ok(StopWordList::builtin()),
        }
    }

    /// Canonical TOML rendering, used in run manifests.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }
}
