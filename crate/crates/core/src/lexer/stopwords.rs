use std::collections::HashSet;
use std::path::Path;

use crate::error::Result;

const BUILTIN: &str = include_str!("../../data/stopwords_en.txt");

/// Immutable set of lowercase stop words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopWordList {
    words: HashSet<String>,
}

impl StopWordList {
    /// The bundled English list (version 1, 179 words).
    pub fn builtin() -> Self {
        Self::parse(BUILTIN)
    }

    /// Parses one word per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopWordList { words }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Ok(Self::parse(&std::fs::read_to_string(path)?))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl Default for StopWordList {
    fn default() -> Self {
        Self::builtin()
    }
}
