use serde::{Deserialize, Serialize};

/// How an uppercase run followed by lowercase letters is divided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AcronymRule {
    /// The last capital of a run starts the next word: `HTMLParser` gives
    /// `html`, `parser` and `IDsArray` gives `i`, `ds`, `array`.
    LastUpperStartsWord,
    /// As above, except that a run followed by a lone `s` keeps it as a plural
    /// suffix: `IDsArray` gives `ids`, `array`.
    #[default]
    PluralAware,
}

/// Splits an identifier on camel case, snake case and letter/digit
/// boundaries. Any non-alphanumeric character acts as a separator. Parts are
/// lowercased and never empty.
pub fn split_identifier(ident: &str, rule: AcronymRule) -> Vec<String> {
    let mut parts = Vec::new();
    for segment in ident.split(|c: char| !c.is_alphanumeric()) {
        if segment.is_empty() {
            continue;
        }
        let chars: Vec<char> = segment.chars().collect();
        let mut current = String::new();
        for i in 0..chars.len() {
            if i > 0 && is_boundary(&chars, i, rule) {
                parts.push(std::mem::take(&mut current));
            }
            current.extend(chars[i].to_lowercase());
        }
        parts.push(current);
    }
    parts
}

fn is_boundary(chars: &[char], i: usize, rule: AcronymRule) -> bool {
    let prev = chars[i - 1];
    let cur = chars[i];
    if prev.is_numeric() != cur.is_numeric() {
        return true;
    }
    if cur.is_uppercase() && !prev.is_uppercase() && !prev.is_numeric() {
        return true;
    }
    if prev.is_uppercase() && cur.is_uppercase() {
        let next = chars.get(i + 1).copied();
        if !next.is_some_and(char::is_lowercase) {
            return false;
        }
        if rule == AcronymRule::PluralAware && next == Some('s') {
            let after = chars.get(i + 2).copied();
            let lone_s = !after.is_some_and(char::is_lowercase);
            return !lone_s;
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(s: &str) -> Vec<String> {
        split_identifier(s, AcronymRule::default())
    }

    #[test]
    fn camel_and_snake() {
        assert_eq!(split("markUsed"), ["mark", "used"]);
        assert_eq!(split("write_string_to_file"), ["write", "string", "to", "file"]);
        assert_eq!(split("MAX_VALUE"), ["max", "value"]);
        assert_eq!(split("x"), ["x"]);
        assert_eq!(split("__init__"), ["init"]);
    }

    #[test]
    fn digits_form_their_own_part() {
        assert_eq!(split("utf8"), ["utf", "8"]);
        assert_eq!(split("base64Encode"), ["base", "64", "encode"]);
        assert_eq!(split("v2Api"), ["v", "2", "api"]);
    }

    #[test]
    fn acronym_variants_differ_on_plurals() {
        assert_eq!(
            split_identifier("getAvailalbeIDsArray", AcronymRule::LastUpperStartsWord),
            ["get", "availalbe", "i", "ds", "array"]
        );
        assert_eq!(
            split_identifier("getAvailalbeIDsArray", AcronymRule::PluralAware),
            ["get", "availalbe", "ids", "array"]
        );
        for rule in [AcronymRule::LastUpperStartsWord, AcronymRule::PluralAware] {
            assert_eq!(split_identifier("HTMLParser", rule), ["html", "parser"]);
            assert_eq!(split_identifier("parseURL", rule), ["parse", "url"]);
            assert_eq!(split_identifier("AStyle", rule), ["a", "style"]);
        }
        assert_eq!(split("IDsequence"), ["i", "dsequence"]);
    }

    #[test]
    fn non_ascii_does_not_panic() {
        assert_eq!(split("größeBerechnen"), ["größe", "berechnen"]);
        assert_eq!(split("名前"), ["名前"]);
    }
}
