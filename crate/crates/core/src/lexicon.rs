//! Word knowledge shared by the tagger and the rules.
//!
//! The bundled defaults (see `data/`) are always loaded first; user files
//! are merged on top. In any user term file a line `-term` removes `term`
//! from that category, and a removal list removes its terms everywhere.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grammar::PosTag;
use crate::tokenizer::{Token, TokenKind};

const DICTIONARY: &str = include_str!("../data/dictionary.txt");
const POS: &str = include_str!("../data/pos.txt");
const ABBREVIATIONS: &str = include_str!("../data/abbreviations.tsv");
const ACRONYMS: &str = include_str!("../data/acronyms.txt");
const SLANG: &str = include_str!("../data/slang.txt");
const DOMAIN_TERMS: &str = include_str!("../data/domain_terms.txt");

/// File names recognised inside a lexicon directory.
pub const BUNDLE_FILES: [(&str, Category); 8] = [
    ("dictionary.txt", Category::Dictionary),
    ("pos.txt", Category::Pos),
    ("abbreviations.tsv", Category::Abbreviations),
    ("acronyms.txt", Category::Acronyms),
    ("slang.txt", Category::Slang),
    ("project_terms.txt", Category::ProjectTerms),
    ("domain_terms.txt", Category::DomainTerms),
    ("remove.txt", Category::Removals),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Dictionary,
    Pos,
    Abbreviations,
    Acronyms,
    Slang,
    ProjectTerms,
    DomainTerms,
    Removals,
}

/// Paths of user lexicon files, merged over the bundled defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LexiconConfig {
    /// Directories holding any subset of the [`BUNDLE_FILES`].
    pub dirs: Vec<PathBuf>,
    pub dictionary: Vec<PathBuf>,
    pub pos: Vec<PathBuf>,
    pub abbreviations: Vec<PathBuf>,
    pub acronyms: Vec<PathBuf>,
    pub slang: Vec<PathBuf>,
    pub project_terms: Vec<PathBuf>,
    pub domain_terms: Vec<PathBuf>,
    pub removals: Vec<PathBuf>,
    /// Project terms given inline rather than by file.
    pub terms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TokenClass {
    Dictionary,
    Domain,
    KnownAbbreviation(Vec<String>),
    AmbiguousAbbreviation(Vec<String>),
    KnownAcronym,
    UnknownAcronym,
    Slang,
    Number,
    SingleLetter,
    Unknown,
}

impl TokenClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TokenClass::Dictionary => "DICTIONARY",
            TokenClass::Domain => "DOMAIN",
            TokenClass::KnownAbbreviation(_) => "KNOWN_ABBREVIATION",
            TokenClass::AmbiguousAbbreviation(_) => "AMBIGUOUS_ABBREVIATION",
            TokenClass::KnownAcronym => "KNOWN_ACRONYM",
            TokenClass::UnknownAcronym => "UNKNOWN_ACRONYM",
            TokenClass::Slang => "SLANG",
            TokenClass::Number => "NUMBER",
            TokenClass::SingleLetter => "SINGLE_LETTER",
            TokenClass::Unknown => "UNKNOWN",
        }
    }

    pub fn expansions(&self) -> Option<&[String]> {
        match self {
            TokenClass::KnownAbbreviation(e) | TokenClass::AmbiguousAbbreviation(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Lexicon {
    dictionary: BTreeSet<String>,
    pos: HashMap<String, Vec<PosTag>>,
    abbreviations: BTreeMap<String, BTreeSet<String>>,
    acronyms: BTreeSet<String>,
    slang: BTreeSet<String>,
    idioms: BTreeSet<Vec<String>>,
    project_terms: BTreeSet<String>,
    domain_terms: BTreeSet<String>,
}

struct Source<'a> {
    path: &'a Path,
    text: &'a str,
    user: bool,
}

impl Source<'_> {
    /// Non-blank lines with comments removed, paired with 1-based numbers.
    fn lines(&self) -> impl Iterator<Item = (usize, &str)> {
        self.text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
    }
}

fn single_term(src: &Source, line: usize, term: &str, lowercase: bool) -> Result<String> {
    if term.chars().any(char::is_whitespace) {
        return Err(Error::malformed(
            src.path,
            line,
            format!("expected one term, got `{term}`"),
        ));
    }
    if term.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::malformed(
            src.path,
            line,
            format!("all-digit entry `{term}`"),
        ));
    }
    Ok(if lowercase {
        term.to_lowercase()
    } else {
        term.to_uppercase()
    })
}

/// Splits an optional removal marker off a user line.
fn removal(src: &Source, line: &str) -> (bool, String) {
    match line.strip_prefix('-') {
        Some(rest) if src.user => (true, rest.trim().to_string()),
        _ => (false, line.to_string()),
    }
}

impl Lexicon {
    /// The bundled lexicon, parsed once per process.
    pub fn builtin() -> &'static Lexicon {
        static BUILTIN: OnceLock<Lexicon> = OnceLock::new();
        BUILTIN.get_or_init(|| {
            let mut lex = Lexicon::default();
            let builtin = [
                (Category::Dictionary, "dictionary.txt", DICTIONARY),
                (Category::Pos, "pos.txt", POS),
                (Category::Abbreviations, "abbreviations.tsv", ABBREVIATIONS),
                (Category::Acronyms, "acronyms.txt", ACRONYMS),
                (Category::Slang, "slang.txt", SLANG),
                (Category::DomainTerms, "domain_terms.txt", DOMAIN_TERMS),
            ];
            let mut touched = HashSet::new();
            for (category, name, text) in builtin {
                let path = PathBuf::from(format!("<builtin>/{name}"));
                let src = Source {
                    path: &path,
                    text,
                    user: false,
                };
                lex.merge(category, &src, &mut touched)
                    .expect("bundled lexicon data is well-formed");
            }
            lex.validate().expect("bundled lexicon data is consistent");
            lex
        })
    }

    /// Bundled defaults merged with the user files named in `cfg`.
    pub fn load(cfg: &LexiconConfig) -> Result<Lexicon> {
        let mut lex = Lexicon::builtin().clone();
        let mut files: Vec<(Category, PathBuf)> = Vec::new();
        for dir in &cfg.dirs {
            if !dir.is_dir() {
                return Err(Error::Config(format!(
                    "lexicon directory {} does not exist",
                    dir.display()
                )));
            }
            for (name, category) in BUNDLE_FILES {
                let path = dir.join(name);
                if path.is_file() {
                    files.push((category, path));
                }
            }
        }
        let listed = [
            (Category::Dictionary, &cfg.dictionary),
            (Category::Pos, &cfg.pos),
            (Category::Abbreviations, &cfg.abbreviations),
            (Category::Acronyms, &cfg.acronyms),
            (Category::Slang, &cfg.slang),
            (Category::ProjectTerms, &cfg.project_terms),
            (Category::DomainTerms, &cfg.domain_terms),
            (Category::Removals, &cfg.removals),
        ];
        for (category, paths) in listed {
            files.extend(paths.iter().map(|p| (category, p.clone())));
        }
        // Removal lists apply after every addition.
        files.sort_by_key(|(category, _)| *category == Category::Removals);

        let mut touched = HashSet::new();
        for (category, path) in &files {
            let text = std::fs::read_to_string(path).map_err(|e| {
                if e.kind() == std::io::ErrorKind::NotFound {
                    Error::Config(format!("lexicon file {} does not exist", path.display()))
                } else {
                    Error::io(path, e)
                }
            })?;
            let src = Source {
                path,
                text: &text,
                user: true,
            };
            lex.merge(*category, &src, &mut touched)?;
        }
        for term in &cfg.terms {
            lex.add_project_term(term);
        }
        lex.validate()?;
        Ok(lex)
    }

    fn merge(
        &mut self,
        category: Category,
        src: &Source,
        touched: &mut HashSet<String>,
    ) -> Result<()> {
        for (line, content) in src.lines() {
            match category {
                Category::Dictionary | Category::ProjectTerms | Category::DomainTerms => {
                    let (remove, term) = removal(src, content);
                    let term = single_term(src, line, &term, true)?;
                    let set = match category {
                        Category::Dictionary => &mut self.dictionary,
                        Category::ProjectTerms => &mut self.project_terms,
                        _ => &mut self.domain_terms,
                    };
                    if remove {
                        set.remove(&term);
                    } else {
                        set.insert(term);
                    }
                }
                Category::Acronyms => {
                    let (remove, term) = removal(src, content);
                    let term = single_term(src, line, &term, false)?;
                    if remove {
                        self.acronyms.remove(&term);
                    } else {
                        self.acronyms.insert(term);
                    }
                }
                Category::Slang => {
                    let (remove, term) = removal(src, content);
                    let words: Vec<String> =
                        term.split_whitespace().map(str::to_lowercase).collect();
                    if words.iter().any(|w| w.bytes().all(|b| b.is_ascii_digit())) {
                        return Err(Error::malformed(src.path, line, "all-digit entry"));
                    }
                    if words.len() == 1 {
                        let word = words.into_iter().next().unwrap_or_default();
                        if remove {
                            self.slang.remove(&word);
                        } else {
                            self.slang.insert(word);
                        }
                    } else if remove {
                        self.idioms.remove(&words);
                    } else {
                        self.idioms.insert(words);
                    }
                }
                Category::Pos => {
                    let (remove, rest) = removal(src, content);
                    if remove {
                        self.pos.remove(&rest.to_lowercase());
                        continue;
                    }
                    let mut parts = rest.split_whitespace();
                    let (Some(word), Some(tags), None) = (parts.next(), parts.next(), parts.next())
                    else {
                        return Err(Error::malformed(
                            src.path,
                            line,
                            "expected `word TAG[,TAG...]`",
                        ));
                    };
                    let tags = tags
                        .split(',')
                        .map(|t| {
                            t.parse::<PosTag>().map_err(|_| {
                                Error::malformed(src.path, line, format!("unknown tag `{t}`"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    self.pos.insert(word.to_lowercase(), tags);
                }
                Category::Abbreviations => {
                    let (remove, rest) = removal(src, content);
                    let mut parts = rest.split('\t').map(str::trim).filter(|s| !s.is_empty());
                    let abbr = parts.next().unwrap_or_default().to_lowercase();
                    let expansion = parts.next().map(str::to_lowercase);
                    if parts.next().is_some() {
                        return Err(Error::malformed(
                            src.path,
                            line,
                            "expected `abbr<TAB>expansion`",
                        ));
                    }
                    if remove {
                        match expansion {
                            Some(e) => {
                                if let Some(set) = self.abbreviations.get_mut(&abbr) {
                                    set.remove(&e);
                                    if set.is_empty() {
                                        self.abbreviations.remove(&abbr);
                                    }
                                }
                            }
                            None => {
                                self.abbreviations.remove(&abbr);
                            }
                        }
                        continue;
                    }
                    let Some(expansion) = expansion else {
                        return Err(Error::malformed(
                            src.path,
                            line,
                            "expected `abbr<TAB>expansion`",
                        ));
                    };
                    if src.user && touched.insert(abbr.clone()) {
                        self.abbreviations.remove(&abbr);
                    }
                    self.abbreviations
                        .entry(abbr)
                        .or_default()
                        .insert(expansion);
                }
                Category::Removals => {
                    let term = content.strip_prefix('-').unwrap_or(content).trim();
                    self.remove_everywhere(term);
                }
            }
        }
        Ok(())
    }

    fn remove_everywhere(&mut self, term: &str) {
        let lower = term.to_lowercase();
        self.dictionary.remove(&lower);
        self.pos.remove(&lower);
        self.abbreviations.remove(&lower);
        self.acronyms.remove(&term.to_uppercase());
        self.slang.remove(&lower);
        self.project_terms.remove(&lower);
        self.domain_terms.remove(&lower);
        let words: Vec<String> = lower.split_whitespace().map(str::to_string).collect();
        self.idioms.remove(&words);
    }

    fn validate(&self) -> Result<()> {
        for (abbr, expansions) in &self.abbreviations {
            for e in expansions {
                if !self.dictionary.contains(e) && !self.is_domain_term(e) {
                    return Err(Error::Config(format!(
                        "abbreviation `{abbr}` expands to `{e}`, which is neither a dictionary nor a domain term"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn add_project_term(&mut self, term: &str) {
        let term = term.trim().to_lowercase();
        if !term.is_empty() {
            self.project_terms.insert(term);
        }
    }

    pub fn contains_word(&self, word: &str) -> bool {
        self.dictionary.contains(word)
    }

    pub fn dictionary_len(&self) -> usize {
        self.dictionary.len()
    }

    /// POS candidates in preference order.
    pub fn pos_tags(&self, word: &str) -> Option<&[PosTag]> {
        self.pos.get(word).map(Vec::as_slice)
    }

    pub fn expansions(&self, abbr: &str) -> Option<&BTreeSet<String>> {
        self.abbreviations.get(abbr)
    }

    pub fn is_acronym(&self, text: &str) -> bool {
        self.acronyms.contains(&text.to_uppercase())
    }

    pub fn is_slang(&self, word: &str) -> bool {
        self.slang.contains(word)
    }

    pub fn idioms(&self) -> impl Iterator<Item = &[String]> {
        self.idioms.iter().map(Vec::as_slice)
    }

    pub fn is_project_term(&self, word: &str) -> bool {
        self.project_terms.contains(word)
    }

    pub fn project_terms(&self) -> &BTreeSet<String> {
        &self.project_terms
    }

    /// Domain vocabulary: explicit domain terms, known acronyms in any case,
    /// and project terms.
    pub fn is_domain_term(&self, word: &str) -> bool {
        self.domain_terms.contains(word)
            || self.is_acronym(word)
            || self.project_terms.contains(word)
    }

    /// True when some dictionary word extends `token` by two or more letters.
    pub fn extends_to_word(&self, token: &str) -> bool {
        self.dictionary
            .range::<str, _>((std::ops::Bound::Included(token), std::ops::Bound::Unbounded))
            .take_while(|w| w.starts_with(token))
            .any(|w| w.len() >= token.len() + 2)
    }

    /// Token classification, first match wins: NUMBER, SINGLE_LETTER,
    /// acronym kinds, SLANG, DICTIONARY, DOMAIN, abbreviation kinds, UNKNOWN.
    ///
    /// An all-caps token that is not a known acronym but spells a known word
    /// or abbreviation (`MAX` in `MAX_VALUE`) is classified as that word.
    pub fn classify(&self, token: &Token) -> TokenClass {
        match token.kind {
            TokenKind::Number => return TokenClass::Number,
            TokenKind::SingleLetter => return TokenClass::SingleLetter,
            TokenKind::Acronym => {
                if self.is_acronym(&token.text) {
                    return TokenClass::KnownAcronym;
                }
                let spelled = self.is_slang(&token.normalized)
                    || self.contains_word(&token.normalized)
                    || self.is_domain_term(&token.normalized)
                    || self.expansions(&token.normalized).is_some();
                if !spelled {
                    return TokenClass::UnknownAcronym;
                }
            }
            TokenKind::Word => {}
        }
        let word = token.normalized.as_str();
        if self.is_slang(word) {
            TokenClass::Slang
        } else if self.contains_word(word) {
            TokenClass::Dictionary
        } else if self.is_domain_term(word) {
            TokenClass::Domain
        } else if let Some(expansions) = self.expansions(word) {
            let list: Vec<String> = expansions.iter().cloned().collect();
            if list.len() == 1 {
                TokenClass::KnownAbbreviation(list)
            } else {
                TokenClass::AmbiguousAbbreviation(list)
            }
        } else {
            TokenClass::Unknown
        }
    }
}

pub fn classify_token(token: &Token, lexicon: &Lexicon) -> TokenClass {
    lexicon.classify(token)
}
