use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::lexer::tokenize_comment;
use crate::model::{CodeCommentPair, Dataset};

/// When two pairs count as the same sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DedupEquality {
    /// Code and comment strings equal after collapsing whitespace runs.
    #[default]
    Raw,
    /// Code lexed into identifier runs and single symbols, comment into
    /// lowercase word tokens.
    Token,
}

impl DedupEquality {
    fn key(self, pair: &CodeCommentPair) -> (String, String) {
        match self {
            DedupEquality::Raw => (collapse_ws(&pair.code), collapse_ws(&pair.comment)),
            DedupEquality::Token => (code_tokens(&pair.code), tokenize_comment(&pair.comment).join(" ")),
        }
    }
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn code_tokens(code: &str) -> String {
    let mut tokens: Vec<String> = Vec::new();
    let mut word = String::new();
    for c in code.chars() {
        if c.is_alphanumeric() || c == '_' || c == '$' {
            word.push(c);
            continue;
        }
        if !word.is_empty() {
            tokens.push(std::mem::take(&mut word));
        }
        if !c.is_whitespace() {
            tokens.push(c.to_string());
        }
    }
    if !word.is_empty() {
        tokens.push(word);
    }
    tokens.join(" ")
}

/// Removal counts for each deduplication step.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedupReport {
    pub train_internal: usize,
    pub valid_internal: usize,
    pub valid_in_train: usize,
    pub test_internal: usize,
    pub test_in_train_or_valid: usize,
    pub train_kept: usize,
    pub valid_kept: usize,
    pub test_kept: usize,
}

impl DedupReport {
    pub fn total_removed(&self) -> usize {
        self.train_internal
            + self.valid_internal
            + self.valid_in_train
            + self.test_internal
            + self.test_in_train_or_valid
    }
}

/// Keeps the first occurrence of each sample within `pairs`, then drops those
/// already in `seen`. Returns the survivors and both removal counts.
fn filter_split(
    pairs: Vec<CodeCommentPair>,
    equality: DedupEquality,
    seen: &HashSet<(String, String)>,
    own: &mut HashSet<(String, String)>,
) -> (Vec<CodeCommentPair>, usize, usize) {
    let mut internal = 0;
    let mut cross = 0;
    let mut kept = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let key = equality.key(&pair);
        if own.contains(&key) {
            internal += 1;
        } else if seen.contains(&key) {
            own.insert(key);
            cross += 1;
        } else {
            own.insert(key);
            kept.push(pair);
        }
    }
    (kept, internal, cross)
}

/// Deduplicates the three splits in order: train internally, then valid
/// internally and against train, then test internally and against both.
pub fn dedup(
    train: Dataset,
    valid: Dataset,
    test: Dataset,
    equality: DedupEquality,
) -> (Dataset, Dataset, Dataset, DedupReport) {
    let (train_split, valid_split, test_split) = (train.split(), valid.split(), test.split());
    let mut report = DedupReport::default();

    let mut train_keys = HashSet::new();
    let (train_pairs, internal, _) =
        filter_split(train.into_pairs(), equality, &HashSet::new(), &mut train_keys);
    report.train_internal = internal;

    let mut valid_keys = HashSet::new();
    let (valid_pairs, internal, cross) =
        filter_split(valid.into_pairs(), equality, &train_keys, &mut valid_keys);
    report.valid_internal = internal;
    report.valid_in_train = cross;

    let mut seen = train_keys;
    seen.extend(valid_keys);
    let (test_pairs, internal, cross) =
        filter_split(test.into_pairs(), equality, &seen, &mut HashSet::new());
    report.test_internal = internal;
    report.test_in_train_or_valid = cross;

    report.train_kept = train_pairs.len();
    report.valid_kept = valid_pairs.len();
    report.test_kept = test_pairs.len();

    // Subsets of valid datasets keep unique ids.
    let rebuild = |split, pairs| Dataset::new(split, pairs).expect("subset of a valid dataset");
    (
        rebuild(train_split, train_pairs),
        rebuild(valid_split, valid_pairs),
        rebuild(test_split, test_pairs),
        report,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Split;

    fn ds(split: Split, items: &[(&str, &str, &str)]) -> Dataset {
        let pairs = items
            .iter()
            .map(|(id, code, comment)| CodeCommentPair::new(*id, *code, *comment).unwrap())
            .collect();
        Dataset::new(split, pairs).unwrap()
    }

    #[test]
    fn exact_duplicate_in_train() {
        let train = ds(Split::Train, &[("a", "c1", "m1"), ("b", "c1", "m1")]);
        let (train, _, _, report) = dedup(
            train,
            ds(Split::Validation, &[]),
            ds(Split::Test, &[]),
            DedupEquality::Raw,
        );
        assert_eq!(train.len(), 1);
        assert_eq!(train.pairs()[0].id, "a");
        assert_eq!(report.train_internal, 1);
        assert_eq!(report.total_removed(), 1);
    }

    #[test]
    fn test_sample_seen_in_train_is_removed() {
        let (_, _, test, report) = dedup(
            ds(Split::Train, &[("t1", "int f()", "does f")]),
            ds(Split::Validation, &[("v1", "int g()", "does g")]),
            ds(
                Split::Test,
                &[("x1", "int  f()", "does\tf"), ("x2", "int g()", "does g"), ("x3", "int h()", "h")],
            ),
            DedupEquality::Raw,
        );
        assert_eq!(test.pairs().iter().map(|p| p.id.as_str()).collect::<Vec<_>>(), ["x3"]);
        assert_eq!(report.test_in_train_or_valid, 2);
    }

    #[test]
    fn disjoint_splits_unchanged() {
        let train = ds(Split::Train, &[("a", "f()", "x")]);
        let valid = ds(Split::Validation, &[("b", "g()", "y")]);
        let test = ds(Split::Test, &[("c", "h()", "z")]);
        let (t2, v2, s2, report) = dedup(train.clone(), valid.clone(), test.clone(), DedupEquality::Raw);
        assert_eq!((t2, v2, s2), (train, valid, test));
        assert_eq!(report.total_removed(), 0);
    }

    #[test]
    fn token_equality_ignores_spacing_and_case() {
        let train = ds(Split::Train, &[("a", "f(a,b)", "Adds it."), ("b", "f( a , b )", "adds it")]);
        let empty = || (ds(Split::Validation, &[]), ds(Split::Test, &[]));
        let (v, t) = empty();
        let (raw, ..) = dedup(train.clone(), v, t, DedupEquality::Raw);
        assert_eq!(raw.len(), 2);
        let (v, t) = empty();
        let (tok, ..) = dedup(train, v, t, DedupEquality::Token);
        assert_eq!(tok.len(), 1);
    }

    #[test]
    fn duplicate_inside_test_that_is_also_in_train_counts_once_as_cross() {
        let (_, _, test, report) = dedup(
            ds(Split::Train, &[("t", "f()", "x")]),
            ds(Split::Validation, &[]),
            ds(Split::Test, &[("a", "f()", "x"), ("b", "f()", "x")]),
            DedupEquality::Raw,
        );
        assert!(test.is_empty());
        assert_eq!(report.test_in_train_or_valid, 1);
        assert_eq!(report.test_internal, 1);
    }
}
