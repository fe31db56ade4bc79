//! Lightweight extraction of Java method headers.
//!
//! This is not a Java parser. It strips comments and annotations, locates the
//! first `name(` before the method body and reads the return type and
//! parameter list around it.

use crate::error::{Error, Result};
use crate::model::Signature;

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "strictfp",
    "transient",
    "volatile",
    "default",
    "sealed",
    "non-sealed",
];

pub fn parse_signature(code: &str) -> Result<Signature> {
    let cleaned = strip_annotations(&strip_comments(code));
    let header = match cleaned.find('{') {
        Some(pos) => &cleaned[..pos],
        None => cleaned.as_str(),
    };

    let (name_start, open) = find_call(header).ok_or_else(|| {
        Error::MalformedSignature(format!("no `name(` found in `{}`", preview(code)))
    })?;
    let name = header[name_start..open].trim().to_string();

    let close = matching_paren(header, open).unwrap_or(header.len());
    let params_text = &header[open + 1..close];
    let mut param_names = Vec::new();
    let mut param_types = Vec::new();
    for param in split_top_level(params_text, ',') {
        if let Some((ty, pname)) = parse_param(param) {
            param_types.push(ty);
            param_names.push(pname);
        }
    }

    let return_type = parse_return_type(&header[..name_start]);

    Ok(Signature {
        name,
        param_names,
        param_types,
        return_type,
    })
}

fn preview(code: &str) -> String {
    let flat: String = code.split_whitespace().collect::<Vec<_>>().join(" ");
    flat.chars().take(60).collect()
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Removes `//` and `/* */` comments, leaving string literals alone.
fn strip_comments(code: &str) -> String {
    let mut out = String::with_capacity(code.len());
    let mut chars = code.chars().peekable();
    let mut in_string: Option<char> = None;
    while let Some(c) = chars.next() {
        if let Some(quote) = in_string {
            out.push(c);
            if c == '\\' {
                if let Some(n) = chars.next() {
                    out.push(n);
                }
            } else if c == quote {
                in_string = None;
            }
            continue;
        }
        match (c, chars.peek()) {
            ('/', Some('/')) => {
                for n in chars.by_ref() {
                    if n == '\n' {
                        out.push('\n');
                        break;
                    }
                }
            }
            ('/', Some('*')) => {
                chars.next();
                let mut prev = '\0';
                for n in chars.by_ref() {
                    if prev == '*' && n == '/' {
                        break;
                    }
                    prev = n;
                }
                out.push(' ');
            }
            ('"', _) | ('\'', _) => {
                in_string = Some(c);
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}

/// Removes `@Name`, `@a.b.Name` and `@Name(...)` annotations.
fn strip_annotations(code: &str) -> String {
    let chars: Vec<char> = code.chars().collect();
    let mut out = String::with_capacity(code.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] != '@' {
            out.push(chars[i]);
            i += 1;
            continue;
        }
        i += 1;
        while i < chars.len() && (is_ident_char(chars[i]) || chars[i] == '.') {
            i += 1;
        }
        let mut j = i;
        while j < chars.len() && chars[j].is_whitespace() {
            j += 1;
        }
        if j < chars.len() && chars[j] == '(' {
            let mut depth = 0usize;
            while j < chars.len() {
                match chars[j] {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            j += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                j += 1;
            }
            i = j;
        }
        out.push(' ');
    }
    out
}

/// Finds the first identifier directly followed by `(`. Returns the start of
/// the identifier and the byte offset of the parenthesis.
fn find_call(header: &str) -> Option<(usize, usize)> {
    for (open, c) in header.char_indices() {
        if c != '(' {
            continue;
        }
        let before = header[..open].trim_end();
        let start = before
            .char_indices()
            .rev()
            .take_while(|&(_, c)| is_ident_char(c))
            .last()
            .map(|(i, _)| i)?;
        return Some((start, open));
    }
    None
}

fn matching_paren(text: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in text[open..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Splits on `sep` outside of `<>`, `()` and `[]`.
fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '<' | '(' | '[' => depth += 1,
            '>' | ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().filter(|p| !p.trim().is_empty()).collect()
}

/// Splits a declaration into whitespace-separated words, keeping generic
/// arguments attached to their type.
fn top_level_words(text: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '<' => depth += 1,
            '>' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if !current.is_empty() {
                words.push(std::mem::take(&mut current));
            }
        } else if !c.is_whitespace() {
            current.push(c);
        }
    }
    if !current.is_empty() {
        words.push(current);
    }
    // `List <String>` and `int []` arrive as separate words.
    let mut merged: Vec<String> = Vec::new();
    for w in words {
        match merged.last_mut() {
            Some(last)
                if !MODIFIERS.contains(&last.as_str())
                    && (w.starts_with('<') || w.starts_with('[') || w.starts_with("...")) =>
            {
                last.push_str(&w)
            }
            _ => merged.push(w),
        }
    }
    merged
}

/// Reduces `java.util.List<Entry>[]` or `String...` to its base identifier.
fn base_type(ty: &str) -> String {
    let head = ty.split(['<', '[']).next().unwrap_or(ty);
    let head = head.trim_end_matches('.');
    head.rsplit('.').next().unwrap_or(head).to_string()
}

fn parse_param(param: &str) -> Option<(String, String)> {
    let words: Vec<String> = top_level_words(param)
        .into_iter()
        .filter(|w| w != "final")
        .collect();
    let (name_word, type_words) = words.split_last()?;
    let name: String = name_word
        .chars()
        .take_while(|&c| is_ident_char(c))
        .collect();
    let ty = type_words.last().map(|t| base_type(t)).unwrap_or_default();
    if name.is_empty() || ty.is_empty() {
        return None;
    }
    Some((ty, name))
}

fn parse_return_type(prefix: &str) -> Option<String> {
    let mut words = top_level_words(prefix);
    words.retain(|w| !MODIFIERS.contains(&w.as_str()));
    words.retain(|w| !w.starts_with('<'));
    let ty = words.last()?;
    let base = base_type(ty);
    if base.is_empty() || base == "void" {
        None
    } else {
        Some(base)
    }
}
