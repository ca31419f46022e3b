//! Naming-style detection and identifier splitting.
//!
//! Word boundaries are placed at `_`/`-` separators, at lower→upper case
//! transitions, before the last letter of an uppercase run that is followed
//! by a lowercase letter (`URLValue` → `URL`, `Value`), and at letter/digit
//! transitions. Separator-free lowercase concatenations stay one token.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NamingStyle {
    Camel,
    Pascal,
    Snake,
    Kebab,
    ScreamingSnake,
    SingleToken,
    Mixed,
}

impl NamingStyle {
    pub const ALL: [NamingStyle; 7] = [
        NamingStyle::Camel,
        NamingStyle::Pascal,
        NamingStyle::Snake,
        NamingStyle::Kebab,
        NamingStyle::ScreamingSnake,
        NamingStyle::SingleToken,
        NamingStyle::Mixed,
    ];

    /// Styles that describe how several words are composed. Only these can
    /// become a corpus's dominant style.
    pub const COMPOSITE: [NamingStyle; 5] = [
        NamingStyle::Camel,
        NamingStyle::Pascal,
        NamingStyle::Snake,
        NamingStyle::Kebab,
        NamingStyle::ScreamingSnake,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamingStyle::Camel => "CAMEL",
            NamingStyle::Pascal => "PASCAL",
            NamingStyle::Snake => "SNAKE",
            NamingStyle::Kebab => "KEBAB",
            NamingStyle::ScreamingSnake => "SCREAMING_SNAKE",
            NamingStyle::SingleToken => "SINGLE_TOKEN",
            NamingStyle::Mixed => "MIXED",
        }
    }

    pub fn is_composite(self) -> bool {
        Self::COMPOSITE.contains(&self)
    }
}

impl fmt::Display for NamingStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamingStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace(['-', ' '], "_");
        let style = match key.as_str() {
            "CAMEL" | "CAMELCASE" | "CAMEL_CASE" => NamingStyle::Camel,
            "PASCAL" | "PASCALCASE" | "PASCAL_CASE" => NamingStyle::Pascal,
            "SNAKE" | "SNAKE_CASE" | "UNDERSCORE" | "UNDER_SCORE" => NamingStyle::Snake,
            "KEBAB" | "KEBAB_CASE" => NamingStyle::Kebab,
            "SCREAMING_SNAKE" | "SCREAMING_SNAKE_CASE" => NamingStyle::ScreamingSnake,
            "SINGLE_TOKEN" => NamingStyle::SingleToken,
            "MIXED" => NamingStyle::Mixed,
            _ => return Err(Error::Config(format!("unknown naming style `{s}`"))),
        };
        Ok(style)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TokenKind {
    Word,
    Acronym,
    Number,
    SingleLetter,
}

impl TokenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::Word => "WORD",
            TokenKind::Acronym => "ACRONYM",
            TokenKind::Number => "NUMBER",
            TokenKind::SingleLetter => "SINGLE_LETTER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub text: String,
    pub normalized: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(text: &str) -> Token {
        Token {
            text: text.to_string(),
            normalized: text.to_ascii_lowercase(),
            kind: token_kind(text),
        }
    }
}

fn token_kind(text: &str) -> TokenKind {
    if text.bytes().all(|b| b.is_ascii_digit()) {
        TokenKind::Number
    } else if text.len() == 1 {
        TokenKind::SingleLetter
    } else if text.bytes().all(|b| b.is_ascii_uppercase()) {
        TokenKind::Acronym
    } else {
        TokenKind::Word
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TokenizedName {
    pub original: String,
    pub style: NamingStyle,
    pub tokens: Vec<Token>,
    /// Separator characters stripped from the start of the name.
    pub leading: String,
    /// Separator characters stripped from the end of the name.
    pub trailing: String,
}

impl TokenizedName {
    /// Number of words, not counting numeric tokens.
    pub fn word_count(&self) -> usize {
        self.tokens
            .iter()
            .filter(|t| t.kind != TokenKind::Number)
            .count()
    }

    pub fn is_multi_token(&self) -> bool {
        self.tokens.len() >= 2
    }

    pub fn normalized(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.normalized.as_str()).collect()
    }
}

fn is_separator(c: char) -> bool {
    c == '_' || c == '-'
}

fn strip_decorations(name: &str) -> (&str, &str, &str) {
    let start = name.len() - name.trim_start_matches(is_separator).len();
    let end = name.trim_end_matches(is_separator).len().max(start);
    (&name[..start], &name[start..end], &name[end..])
}

fn segments(core: &str) -> impl Iterator<Item = &str> {
    core.split(is_separator).filter(|s| !s.is_empty())
}

/// Byte offsets inside `segment` where a new word starts (excluding 0).
fn word_starts(segment: &str) -> Vec<usize> {
    let bytes = segment.as_bytes();
    let mut starts = Vec::new();
    for i in 1..bytes.len() {
        let prev = bytes[i - 1];
        let cur = bytes[i];
        let next = bytes.get(i + 1).copied();
        let boundary = (prev.is_ascii_lowercase() && cur.is_ascii_uppercase())
            || (prev.is_ascii_alphabetic() && cur.is_ascii_digit())
            || (prev.is_ascii_digit() && cur.is_ascii_alphabetic())
            || (prev.is_ascii_uppercase()
                && cur.is_ascii_uppercase()
                && next.is_some_and(|n| n.is_ascii_lowercase()));
        if boundary {
            starts.push(i);
        }
    }
    starts
}

fn has_lower_upper(segment: &str) -> bool {
    segment
        .as_bytes()
        .windows(2)
        .any(|w| w[0].is_ascii_lowercase() && w[1].is_ascii_uppercase())
}

fn has_acronym_boundary(segment: &str) -> bool {
    segment.as_bytes().windows(3).any(|w| {
        w[0].is_ascii_uppercase() && w[1].is_ascii_uppercase() && w[2].is_ascii_lowercase()
    })
}

/// Classify a name's composition style.
///
/// Acronym runs inside separated words are ignored (`DOM_tree` is SNAKE).
/// Leading and trailing separators are decoration and do not count.
pub fn detect_style(name: &str) -> NamingStyle {
    let (_, core, _) = strip_decorations(name);
    let has_underscore = core.contains('_');
    let has_dash = core.contains('-');
    let lower_upper = segments(core).any(has_lower_upper);

    if has_underscore && has_dash {
        return NamingStyle::Mixed;
    }
    if has_underscore || has_dash {
        if lower_upper {
            return NamingStyle::Mixed;
        }
        if has_dash {
            return NamingStyle::Kebab;
        }
        let letters: Vec<u8> = core.bytes().filter(u8::is_ascii_alphabetic).collect();
        let all_caps = !letters.is_empty() && letters.iter().all(u8::is_ascii_uppercase);
        return if all_caps {
            NamingStyle::ScreamingSnake
        } else {
            NamingStyle::Snake
        };
    }

    let transitions = lower_upper || has_acronym_boundary(core);
    if !transitions {
        return NamingStyle::SingleToken;
    }
    match core.bytes().find(u8::is_ascii_alphabetic) {
        Some(b) if b.is_ascii_lowercase() => NamingStyle::Camel,
        Some(_) => NamingStyle::Pascal,
        None => NamingStyle::SingleToken,
    }
}

/// Split a name into typed tokens and record its style.
pub fn split(name: &str) -> TokenizedName {
    let (leading, core, trailing) = strip_decorations(name);
    let mut tokens = Vec::new();
    for segment in segments(core) {
        let mut from = 0;
        for start in word_starts(segment) {
            tokens.push(Token::new(&segment[from..start]));
            from = start;
        }
        tokens.push(Token::new(&segment[from..]));
    }
    if tokens.is_empty() {
        // Only reachable for names made entirely of separators, which the
        // record invariant rules out.
        tokens.push(Token::new(name));
    }
    TokenizedName {
        original: name.to_string(),
        style: detect_style(name),
        tokens,
        leading: leading.to_string(),
        trailing: trailing.to_string(),
    }
}
