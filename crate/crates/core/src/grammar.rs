//! Lexicon-driven part-of-speech tagging and phrase-pattern classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lexicon::{Lexicon, TokenClass};
use crate::tokenizer::TokenizedName;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PosTag {
    Verb,
    Noun,
    Adj,
    Adv,
    Prep,
    Det,
    Pron,
    Conj,
    Num,
    Unk,
}

impl PosTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::Verb => "VERB",
            PosTag::Noun => "NOUN",
            PosTag::Adj => "ADJ",
            PosTag::Adv => "ADV",
            PosTag::Prep => "PREP",
            PosTag::Det => "DET",
            PosTag::Pron => "PRON",
            PosTag::Conj => "CONJ",
            PosTag::Num => "NUM",
            PosTag::Unk => "UNK",
        }
    }

    /// Tie-break rank; lower wins.
    fn priority(self) -> u8 {
        match self {
            PosTag::Noun => 0,
            PosTag::Adj => 1,
            PosTag::Verb => 2,
            PosTag::Adv => 3,
            PosTag::Det => 4,
            PosTag::Pron => 5,
            PosTag::Prep => 6,
            PosTag::Conj => 7,
            PosTag::Num => 8,
            PosTag::Unk => 9,
        }
    }

    /// Tags that may precede a head noun inside a phrase.
    fn is_modifier(self) -> bool {
        matches!(self, PosTag::Adj | PosTag::Noun | PosTag::Num | PosTag::Unk)
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "VERB" => PosTag::Verb,
            "NOUN" => PosTag::Noun,
            "ADJ" => PosTag::Adj,
            "ADV" => PosTag::Adv,
            "PREP" => PosTag::Prep,
            "DET" => PosTag::Det,
            "PRON" => PosTag::Pron,
            "CONJ" => PosTag::Conj,
            "NUM" => PosTag::Num,
            "UNK" => PosTag::Unk,
            _ => return Err(Error::Config(format!("unknown POS tag `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GrammarPattern {
    VerbPhrase,
    VerbPhrasePp,
    Predicate,
    NounPhrase,
    SingleVerb,
    Other,
}

impl GrammarPattern {
    pub fn as_str(self) -> &'static str {
        match self {
            GrammarPattern::VerbPhrase => "VERB_PHRASE",
            GrammarPattern::VerbPhrasePp => "VERB_PHRASE_PP",
            GrammarPattern::Predicate => "PREDICATE",
            GrammarPattern::NounPhrase => "NOUN_PHRASE",
            GrammarPattern::SingleVerb => "SINGLE_VERB",
            GrammarPattern::Other => "OTHER",
        }
    }
}

impl fmt::Display for GrammarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedName {
    pub tokenized: TokenizedName,
    pub classes: Vec<TokenClass>,
    pub tags: Vec<PosTag>,
}

/// Leading words that make a boolean predicate.
pub const PREDICATE_WORDS: [&str; 6] = ["is", "has", "can", "should", "was", "are"];

fn suffix_guess(word: &str) -> Option<PosTag> {
    let ends = |suffixes: &[&str]| {
        suffixes
            .iter()
            .any(|s| word.len() > s.len() && word.ends_with(s))
    };
    if ends(&["tion", "ment", "ness"]) {
        Some(PosTag::Noun)
    } else if ends(&["ize", "ify"]) {
        Some(PosTag::Verb)
    } else if ends(&["able", "ful"]) {
        Some(PosTag::Adj)
    } else {
        None
    }
}

fn candidates(word: &str, class: &TokenClass, lexicon: &Lexicon) -> Vec<PosTag> {
    let listed = |w: &str| lexicon.pos_tags(w).map(<[PosTag]>::to_vec);
    match class {
        TokenClass::Number => vec![PosTag::Num],
        TokenClass::SingleLetter => listed(word).unwrap_or_else(|| vec![PosTag::Unk]),
        TokenClass::KnownAcronym | TokenClass::UnknownAcronym => vec![PosTag::Noun],
        TokenClass::Domain => listed(word).unwrap_or_else(|| vec![PosTag::Noun]),
        TokenClass::KnownAbbreviation(expansions)
        | TokenClass::AmbiguousAbbreviation(expansions) => {
            let mut tags = Vec::new();
            for e in expansions {
                for &t in lexicon.pos_tags(e).unwrap_or(&[]) {
                    if !tags.contains(&t) {
                        tags.push(t);
                    }
                }
            }
            if tags.is_empty() {
                tags.push(PosTag::Noun);
            }
            tags
        }
        // Dictionary words missing from the POS lexicon are open-class;
        // treat them as nouns once suffixes give no better signal.
        TokenClass::Dictionary => listed(word)
            .or_else(|| suffix_guess(word).map(|t| vec![t]))
            .unwrap_or_else(|| vec![PosTag::Noun]),
        TokenClass::Slang | TokenClass::Unknown => listed(word)
            .or_else(|| suffix_guess(word).map(|t| vec![t]))
            .unwrap_or_else(|| vec![PosTag::Unk]),
    }
}

fn is_participle(word: &str, cands: &[PosTag]) -> bool {
    (word.ends_with("ed") || word.ends_with("ing"))
        && cands.contains(&PosTag::Adj)
        && cands.contains(&PosTag::Verb)
}

fn resolve(word: &str, cands: &[PosTag], index: usize, len: usize, chosen: &[PosTag]) -> PosTag {
    if cands.len() == 1 {
        return cands[0];
    }
    let has = |t: PosTag| cands.contains(&t);
    let first = index == 0;
    let last = index + 1 == len;

    if first {
        // A leading past participle modifies what follows (`managedResource...`);
        // imperatives use the base form.
        if len > 1 && word.ends_with("ed") && is_participle(word, cands) {
            return PosTag::Adj;
        }
        if has(PosTag::Verb) {
            return PosTag::Verb;
        }
    }
    if last && has(PosTag::Noun) {
        // A verb-first word closing a verb-less name carries the action
        // (`resourceRegister`).
        let verb_primary = cands[0] == PosTag::Verb;
        if len > 1 && verb_primary && !chosen.contains(&PosTag::Verb) {
            return PosTag::Verb;
        }
        return PosTag::Noun;
    }
    if !first && !last && has(PosTag::Adj) && has(PosTag::Verb) {
        return PosTag::Adj;
    }
    if index > 0 && chosen[index - 1] == PosTag::Prep {
        if has(PosTag::Noun) {
            return PosTag::Noun;
        }
        if has(PosTag::Det) {
            return PosTag::Det;
        }
    }
    cands
        .iter()
        .copied()
        .min_by_key(|t| t.priority())
        .unwrap_or(PosTag::Unk)
}

/// Assign one POS tag per token.
///
/// Candidates come from the POS lexicon (acronyms and domain terms default
/// to NOUN, abbreviations borrow their expansions' tags). Ambiguity is
/// resolved in order: a leading word prefers VERB, the final word prefers
/// NOUN, a medial word that can be VERB or ADJ is ADJ, a word after a
/// preposition prefers NOUN then DET, and remaining ties go by
/// NOUN > ADJ > VERB > ADV.
pub fn tag(tokenized: &TokenizedName, lexicon: &Lexicon) -> TaggedName {
    let len = tokenized.tokens.len();
    let mut classes = Vec::with_capacity(len);
    let mut tags = Vec::with_capacity(len);
    for (index, token) in tokenized.tokens.iter().enumerate() {
        let class = lexicon.classify(token);
        let cands = candidates(&token.normalized, &class, lexicon);
        let chosen = resolve(&token.normalized, &cands, index, len, &tags);
        classes.push(class);
        tags.push(chosen);
    }
    TaggedName {
        tokenized: tokenized.clone(),
        classes,
        tags,
    }
}

/// First matching rule wins; every tag sequence gets exactly one pattern.
pub fn classify_pattern(tagged: &TaggedName) -> GrammarPattern {
    let tags = &tagged.tags;
    let (Some(&first), Some(&last)) = (tags.first(), tags.last()) else {
        return GrammarPattern::Other;
    };
    if tags.len() == 1 && first == PosTag::Verb {
        return GrammarPattern::SingleVerb;
    }
    if first == PosTag::Verb {
        if let Some(prep) = tags.iter().position(|&t| t == PosTag::Prep) {
            if tags[prep + 1..].contains(&PosTag::Noun) {
                return GrammarPattern::VerbPhrasePp;
            }
        }
        if tags.len() >= 2
            && last == PosTag::Noun
            && tags[1..tags.len() - 1].iter().all(|t| t.is_modifier())
        {
            return GrammarPattern::VerbPhrase;
        }
    }
    let lead = tagged
        .tokenized
        .tokens
        .first()
        .map(|t| t.normalized.as_str())
        .unwrap_or("");
    if PREDICATE_WORDS.contains(&lead) {
        return GrammarPattern::Predicate;
    }
    if last == PosTag::Noun && tags.iter().all(|t| t.is_modifier()) {
        return GrammarPattern::NounPhrase;
    }
    GrammarPattern::Other
}
