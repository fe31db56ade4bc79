//! From raw code and comment text to normalized token streams.

mod comment;
mod porter;
mod signature;
mod split;
mod stopwords;

use std::collections::BTreeSet;

pub use comment::tokenize_comment;
pub use porter::stem;
pub use signature::parse_signature;
pub use split::{split_identifier, AcronymRule};
pub use stopwords::StopWordList;

use crate::error::Result;
use crate::model::{CodeCommentPair, Signature, TokenizedPair};

/// Settings that decide which signature words a reader is assumed to see.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lexer {
    pub acronym_rule: AcronymRule,
    /// Include parameter and return types in the signature words.
    pub include_types: bool,
}

impl Default for Lexer {
    fn default() -> Self {
        Lexer {
            acronym_rule: AcronymRule::default(),
            include_types: true,
        }
    }
}

impl Lexer {
    /// Stemmed words of the split signature identifiers.
    pub fn signature_tokens(&self, sig: &Signature) -> BTreeSet<String> {
        let mut idents: Vec<&str> = vec![sig.name.as_str()];
        idents.extend(sig.param_names.iter().map(String::as_str));
        if self.include_types {
            idents.extend(sig.param_types.iter().map(String::as_str));
            idents.extend(sig.return_type.as_deref());
        }
        idents
            .into_iter()
            .flat_map(|ident| split_identifier(ident, self.acronym_rule))
            .map(|part| stem(&part))
            .collect()
    }

    /// Surface and stemmed comment tokens.
    pub fn comment_tokens(&self, comment: &str) -> (Vec<String>, Vec<String>) {
        let surface = tokenize_comment(comment);
        let stemmed = surface.iter().map(|t| stem(t)).collect();
        (surface, stemmed)
    }

    pub fn tokenize_pair(&self, pair: &CodeCommentPair) -> Result<TokenizedPair> {
        let sig = parse_signature(&pair.code)?;
        let (surface_tokens, comment_tokens) = self.comment_tokens(&pair.comment);
        Ok(TokenizedPair {
            id: pair.id.clone(),
            raw_comment_len: surface_tokens.len(),
            surface_tokens,
            comment_tokens,
            signature_tokens: self.signature_tokens(&sig),
        })
    }
}
