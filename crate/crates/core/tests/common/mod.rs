//! Brute-force reference for the information measures, written directly from
//! the definitions and sharing no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub struct OracleScore {
    pub conditioned: f64,
    pub unconditioned: f64,
    pub mesia: f64,
}

/// Occurrences of `word` across every comment, by linear scan.
pub fn count(corpus: &[Vec<String>], word: &str) -> usize {
    corpus.iter().flatten().filter(|w| *w == word).count()
}

pub fn total(corpus: &[Vec<String>]) -> usize {
    corpus.iter().map(Vec::len).sum()
}

pub fn distinct(corpus: &[Vec<String>]) -> usize {
    corpus.iter().flatten().collect::<BTreeSet<_>>().len()
}

/// `p(w|W)` with the unseen-word rule `1 / (total + distinct)`.
pub fn probability(corpus: &[Vec<String>], word: &str) -> f64 {
    let c = count(corpus, word);
    if c == 0 {
        1.0 / (total(corpus) + distinct(corpus)) as f64
    } else {
        c as f64 / total(corpus) as f64
    }
}

pub fn score(corpus: &[Vec<String>], comment: &[String], signature: &BTreeSet<String>) -> OracleScore {
    let mut conditioned = 0.0;
    let mut unconditioned = 0.0;
    for w in comment {
        let p = probability(corpus, w);
        let p_given_code = if signature.contains(w) { 1.0 } else { p };
        unconditioned -= p.log2();
        conditioned -= p_given_code.log2();
    }
    OracleScore {
        conditioned,
        unconditioned,
        mesia: conditioned / comment.len() as f64,
    }
}

pub fn approx(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Prints a one-line acceptance verdict and fails the test on a miss.
pub fn verdict(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}
