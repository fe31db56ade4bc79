/// Splits a comment into lowercase word tokens.
///
/// Tokens are separated by whitespace and hyphens, and leading and trailing
/// punctuation is stripped. Internal punctuation such as the dot in `e.g` or
/// the apostrophe in `entry's` is kept.
pub fn tokenize_comment(comment: &str) -> Vec<String> {
    comment
        .split(|c: char| c.is_whitespace() || c == '-')
        .map(|raw| raw.trim_matches(|c: char| !c.is_alphanumeric()))
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_has_eighteen_tokens() {
        let toks = tokenize_comment(
            "marks the specified entry as used by setting its last used time \
             to the current time in nanoseconds.",
        );
        assert_eq!(toks.len(), 18);
        assert_eq!(toks.last().unwrap(), "nanoseconds");
    }

    #[test]
    fn empty_input() {
        assert!(tokenize_comment("").is_empty());
        assert!(tokenize_comment("  -- ... ").is_empty());
    }

    #[test]
    fn hyphens_split() {
        assert_eq!(
            tokenize_comment("java nio replacement of common-io"),
            ["java", "nio", "replacement", "of", "common", "io"]
        );
    }

    #[test]
    fn javadoc_markup_is_stripped() {
        assert_eq!(
            tokenize_comment("Returns the {@link Entry}, e.g. null"),
            ["returns", "the", "link", "entry", "e.g", "null"]
        );
    }

    #[test]
    fn digits_are_kept() {
        assert_eq!(tokenize_comment("wait 10 ms."), ["wait", "10", "ms"]);
    }
}
