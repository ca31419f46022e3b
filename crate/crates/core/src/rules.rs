//! The naming rules, their weights, and per-name evaluation.
//!
//! Default weights are developer-agreement percentages (share answering
//! "strongly agree" or "agree"). A name's score is the weight share of the
//! applicable rules it satisfies.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grammar::{classify_pattern, tag, GrammarPattern, PosTag, TaggedName};
use crate::ingest::{IdentifierRecord, Kind};
use crate::lexicon::{Lexicon, TokenClass};
use crate::tokenizer::{split, NamingStyle, TokenKind, TokenizedName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R1_STYLE")]
    Style,
    #[serde(rename = "R2_GRAMMAR")]
    Grammar,
    #[serde(rename = "R3_VERB")]
    Verb,
    #[serde(rename = "R4_DICTIONARY")]
    Dictionary,
    #[serde(rename = "R5_FULL_WORDS")]
    FullWords,
    #[serde(rename = "R6_SLANG")]
    Slang,
    #[serde(rename = "R7_ABBREVIATION")]
    Abbreviation,
    #[serde(rename = "R8_ACRONYM")]
    Acronym,
    #[serde(rename = "R9_PREFIX_SUFFIX")]
    PrefixSuffix,
    #[serde(rename = "R10_LENGTH")]
    Length,
    #[serde(rename = "R11_HUNGARIAN")]
    Hungarian,
}

impl RuleId {
    pub const ALL: [RuleId; 11] = [
        RuleId::Style,
        RuleId::Grammar,
        RuleId::Verb,
        RuleId::Dictionary,
        RuleId::FullWords,
        RuleId::Slang,
        RuleId::Abbreviation,
        RuleId::Acronym,
        RuleId::PrefixSuffix,
        RuleId::Length,
        RuleId::Hungarian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Style => "R1_STYLE",
            RuleId::Grammar => "R2_GRAMMAR",
            RuleId::Verb => "R3_VERB",
            RuleId::Dictionary => "R4_DICTIONARY",
            RuleId::FullWords => "R5_FULL_WORDS",
            RuleId::Slang => "R6_SLANG",
            RuleId::Abbreviation => "R7_ABBREVIATION",
            RuleId::Acronym => "R8_ACRONYM",
            RuleId::PrefixSuffix => "R9_PREFIX_SUFFIX",
            RuleId::Length => "R10_LENGTH",
            RuleId::Hungarian => "R11_HUNGARIAN",
        }
    }

    /// Share of developers agreeing with the rule, in percent. The
    /// Hungarian-notation rule was not surveyed and sits at the midpoint.
    pub fn default_weight(self) -> f64 {
        match self {
            RuleId::Style => 98.71,
            RuleId::Grammar => 78.72,
            RuleId::Verb => 84.64,
            RuleId::Dictionary => 97.22,
            RuleId::FullWords => 96.89,
            RuleId::Slang => 89.08,
            RuleId::Abbreviation => 93.49,
            RuleId::Acronym => 95.82,
            RuleId::PrefixSuffix => 89.32,
            RuleId::Length => 81.00,
            RuleId::Hungarian => 50.00,
        }
    }

    pub fn enabled_by_default(self) -> bool {
        self != RuleId::Hungarian
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    /// Accepts the full id (`R3_VERB`) or its number (`R3`), any case.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        RuleId::ALL
            .into_iter()
            .find(|r| {
                let id = r.as_str();
                key == id || id.split('_').next() == Some(key.as_str())
            })
            .ok_or_else(|| Error::Config(format!("unknown rule id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Severity {
    Error,
    Warn,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "ERROR",
            Severity::Warn => "WARN",
            Severity::Info => "INFO",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleConfig {
    /// Per-rule switches; rules not listed keep their default.
    pub enabled: BTreeMap<RuleId, bool>,
    /// Per-rule weight overrides in (0, 100].
    pub weights: BTreeMap<RuleId, f64>,
    pub max_words: usize,
    pub soft_words: usize,
    pub accessor_exemption: bool,
    pub test_exemption: bool,
    pub style_override: Option<NamingStyle>,
    pub languages_without_namespaces: BTreeSet<String>,
    /// Report rules weighted below 85 as INFO instead of WARN.
    pub downgrade_low_consensus: bool,
    /// Treat CAMEL and PASCAL as one style for consistency checks.
    pub camel_pascal_equivalent: bool,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            enabled: BTreeMap::new(),
            weights: BTreeMap::new(),
            max_words: 7,
            soft_words: 5,
            accessor_exemption: true,
            test_exemption: true,
            style_override: None,
            languages_without_namespaces: BTreeSet::from(["c".to_string()]),
            downgrade_low_consensus: false,
            camel_pascal_equivalent: false,
        }
    }
}

impl RuleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.soft_words == 0 || self.max_words == 0 {
            return Err(Error::Config(
                "soft_words and max_words must be positive".into(),
            ));
        }
        if self.soft_words > self.max_words {
            return Err(Error::Config(format!(
                "soft_words ({}) exceeds max_words ({})",
                self.soft_words, self.max_words
            )));
        }
        for (rule, weight) in &self.weights {
            if !(*weight > 0.0 && *weight <= 100.0) {
                return Err(Error::Config(format!(
                    "weight for {rule} must be in (0, 100], got {weight}"
                )));
            }
        }
        Ok(())
    }

    pub fn is_enabled(&self, rule: RuleId) -> bool {
        self.enabled
            .get(&rule)
            .copied()
            .unwrap_or_else(|| rule.enabled_by_default())
    }

    pub fn weight(&self, rule: RuleId) -> f64 {
        self.weights
            .get(&rule)
            .copied()
            .unwrap_or_else(|| rule.default_weight())
    }

    /// Severity by consensus strength: ≥ 95 ERROR, ≥ 85 WARN, below that
    /// WARN (or INFO when downgrading).
    pub fn severity(&self, rule: RuleId) -> Severity {
        let weight = self.weight(rule);
        if weight >= 95.0 {
            Severity::Error
        } else if weight >= 85.0 || !self.downgrade_low_consensus {
            Severity::Warn
        } else {
            Severity::Info
        }
    }

    fn styles_match(&self, a: NamingStyle, b: NamingStyle) -> bool {
        let pair = |s| matches!(s, NamingStyle::Camel | NamingStyle::Pascal);
        a == b || (self.camel_pascal_equivalent && pair(a) && pair(b))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleFinding {
    pub rule: RuleId,
    pub severity: Severity,
    pub weight: f64,
    pub message: String,
    pub evidence: Vec<String>,
}

impl RuleFinding {
    fn new(rule: RuleId, cfg: &RuleConfig, message: String, evidence: Vec<String>) -> RuleFinding {
        RuleFinding {
            rule,
            severity: cfg.severity(rule),
            weight: cfg.weight(rule),
            message,
            evidence,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NameReport {
    pub record: IdentifierRecord,
    pub tokenized: TokenizedName,
    pub tags: Vec<PosTag>,
    pub pattern: GrammarPattern,
    pub findings: Vec<RuleFinding>,
    pub applicable: BTreeSet<RuleId>,
    pub score: f64,
}

impl NameReport {
    pub fn finding(&self, rule: RuleId) -> Option<&RuleFinding> {
        self.findings.iter().find(|f| f.rule == rule)
    }

    pub fn fails(&self, rule: RuleId) -> bool {
        self.finding(rule).is_some()
    }

    /// Re-judge naming style against `target` and refresh the score.
    pub fn restyle(&mut self, target: Option<NamingStyle>, cfg: &RuleConfig) {
        self.findings.retain(|f| f.rule != RuleId::Style);
        if self.applicable.contains(&RuleId::Style) {
            if let Some(f) = check_style(&self.tokenized, cfg, target) {
                self.findings.push(f);
                self.findings.sort_by_key(|f| f.rule);
            }
        }
        self.score = score(&self.applicable, &self.findings, cfg);
    }
}

fn texts<'a>(tokens: impl IntoIterator<Item = &'a crate::tokenizer::Token>) -> Vec<String> {
    tokens.into_iter().map(|t| t.text.clone()).collect()
}

pub fn check_style(
    tokenized: &TokenizedName,
    cfg: &RuleConfig,
    corpus_style: Option<NamingStyle>,
) -> Option<RuleFinding> {
    let decoration = if tokenized.leading.is_empty() && tokenized.trailing.is_empty() {
        String::new()
    } else {
        format!(
            " (decorated `{}…{}`)",
            tokenized.leading, tokenized.trailing
        )
    };
    let style = tokenized.style;
    if style == NamingStyle::Mixed {
        return Some(RuleFinding::new(
            RuleId::Style,
            cfg,
            format!("`{}` mixes naming styles{decoration}", tokenized.original),
            vec![tokenized.original.clone()],
        ));
    }
    let target = cfg.style_override.or(corpus_style)?;
    if tokenized.is_multi_token() && style.is_composite() && !cfg.styles_match(style, target) {
        return Some(RuleFinding::new(
            RuleId::Style,
            cfg,
            format!(
                "`{}` is {style} but the project convention is {target}{decoration}",
                tokenized.original
            ),
            vec![tokenized.original.clone()],
        ));
    }
    None
}

pub fn check_grammar(
    pattern: GrammarPattern,
    tokenized: &TokenizedName,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    if !tokenized.is_multi_token() || pattern != GrammarPattern::Other {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Grammar,
        cfg,
        format!(
            "`{}` does not read as a verb phrase or a noun phrase ending in its head noun",
            tokenized.original
        ),
        texts(&tokenized.tokens),
    ))
}

pub fn check_verb(
    pattern: GrammarPattern,
    tagged: &TaggedName,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    use GrammarPattern::*;
    if matches!(pattern, VerbPhrase | VerbPhrasePp | SingleVerb | Predicate) {
        return None;
    }
    let evidence = texts(&tagged.tokenized.tokens);
    let accessor_like = pattern == NounPhrase && !tagged.tags.contains(&PosTag::Unk);
    if accessor_like && cfg.accessor_exemption {
        let mut finding = RuleFinding::new(
            RuleId::Verb,
            cfg,
            format!(
                "`{}` has no verb; accepted as an accessor-style name",
                tagged.tokenized.original
            ),
            evidence,
        );
        finding.severity = Severity::Info;
        return Some(finding);
    }
    Some(RuleFinding::new(
        RuleId::Verb,
        cfg,
        format!("`{}` contains no verb", tagged.tokenized.original),
        evidence,
    ))
}

pub fn check_dictionary(
    tokenized: &TokenizedName,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    let evidence: Vec<String> = tokenized
        .tokens
        .iter()
        .filter(|t| {
            matches!(
                lexicon.classify(t),
                TokenClass::Unknown | TokenClass::Number
            )
        })
        .map(|t| t.text.clone())
        .collect();
    if evidence.is_empty() {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Dictionary,
        cfg,
        format!("not dictionary or domain words: {}", evidence.join(", ")),
        evidence,
    ))
}

pub fn check_full_words(tokenized: &TokenizedName, cfg: &RuleConfig) -> Option<RuleFinding> {
    let evidence = texts(
        tokenized
            .tokens
            .iter()
            .filter(|t| t.kind == TokenKind::SingleLetter),
    );
    if evidence.is_empty() {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::FullWords,
        cfg,
        format!("single-letter words: {}", evidence.join(", ")),
        evidence,
    ))
}

pub fn check_slang(
    tokenized: &TokenizedName,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    let words = tokenized.normalized();
    let mut evidence = Vec::new();
    for idiom in lexicon.idioms() {
        if idiom.len() > words.len() {
            continue;
        }
        for (start, window) in words.windows(idiom.len()).enumerate() {
            if window.iter().zip(idiom).all(|(w, i)| *w == i) {
                let slice = &tokenized.tokens[start..start + idiom.len()];
                evidence.push(texts(slice).join(" "));
            }
        }
    }
    for token in &tokenized.tokens {
        if token.kind != TokenKind::Number && lexicon.is_slang(&token.normalized) {
            evidence.push(token.text.clone());
        }
    }
    if evidence.is_empty() {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Slang,
        cfg,
        format!("slang or idiom: {}", evidence.join(", ")),
        evidence,
    ))
}

pub fn check_abbreviations(
    tokenized: &TokenizedName,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    let mut evidence = Vec::new();
    let mut notes = Vec::new();
    for token in tokenized
        .tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Word)
    {
        match lexicon.classify(token) {
            TokenClass::AmbiguousAbbreviation(expansions) => {
                notes.push(format!(
                    "`{}` could mean {}",
                    token.text,
                    expansions.join(" or ")
                ));
                evidence.push(token.text.clone());
            }
            TokenClass::Unknown if lexicon.extends_to_word(&token.normalized) => {
                notes.push(format!(
                    "`{}` looks like an unrecognised abbreviation",
                    token.text
                ));
                evidence.push(token.text.clone());
            }
            _ => {}
        }
    }
    if evidence.is_empty() {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Abbreviation,
        cfg,
        notes.join("; "),
        evidence,
    ))
}

pub fn check_acronyms(
    tokenized: &TokenizedName,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    let evidence = texts(tokenized.tokens.iter().filter(|t| {
        t.kind == TokenKind::Acronym && lexicon.classify(t) == TokenClass::UnknownAcronym
    }));
    if evidence.is_empty() {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Acronym,
        cfg,
        format!("unrecognised acronyms: {}", evidence.join(", ")),
        evidence,
    ))
}

pub fn check_prefix_suffix(
    record: &IdentifierRecord,
    tokenized: &TokenizedName,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    if cfg.languages_without_namespaces.contains(&record.language) || !tokenized.is_multi_token() {
        return None;
    }
    let words = tokenized.normalized();
    let is_term = |w: &str| {
        lexicon.is_project_term(w)
            || record
                .project_terms_hint
                .iter()
                .any(|h| h.eq_ignore_ascii_case(w))
    };
    let mut evidence = Vec::new();
    let first = &tokenized.tokens[0];
    let last = &tokenized.tokens[tokenized.tokens.len() - 1];
    if is_term(&first.normalized) {
        evidence.push(first.text.clone());
    }
    if is_term(&last.normalized) {
        evidence.push(last.text.clone());
    }
    if let Some(container) = &record.container {
        let owner = split(container);
        let owner_words = owner.normalized();
        if owner_words.len() < words.len() {
            if words.starts_with(&owner_words) {
                evidence.push(texts(&tokenized.tokens[..owner_words.len()]).join(""));
            } else if words.ends_with(&owner_words) {
                evidence.push(texts(&tokenized.tokens[words.len() - owner_words.len()..]).join(""));
            }
        }
    }
    if evidence.is_empty() {
        return None;
    }
    evidence.dedup();
    Some(RuleFinding::new(
        RuleId::PrefixSuffix,
        cfg,
        format!("system term used as prefix/suffix: {}", evidence.join(", ")),
        evidence,
    ))
}

pub fn check_length(
    record: &IdentifierRecord,
    tokenized: &TokenizedName,
    cfg: &RuleConfig,
) -> Option<RuleFinding> {
    if cfg.test_exemption && record.kind == Kind::Test {
        return None;
    }
    let count = tokenized.word_count();
    let severity = if count > cfg.max_words {
        Severity::Error
    } else if count > cfg.soft_words {
        Severity::Warn
    } else {
        return None;
    };
    let limit = if severity == Severity::Error {
        format!("maximum is {}", cfg.max_words)
    } else {
        format!("aim for at most {}", cfg.soft_words)
    };
    Some(RuleFinding {
        rule: RuleId::Length,
        severity,
        weight: cfg.weight(RuleId::Length),
        message: format!("{count} words; {limit}"),
        evidence: Vec::new(),
    })
}

/// Type prefixes that mark Hungarian notation.
pub const TYPE_PREFIXES: [&str; 10] = [
    "bool", "int", "str", "string", "float", "obj", "arr", "fn", "m", "f",
];

pub fn check_hungarian(tokenized: &TokenizedName, cfg: &RuleConfig) -> Option<RuleFinding> {
    if !cfg.is_enabled(RuleId::Hungarian) || !tokenized.is_multi_token() {
        return None;
    }
    let first = &tokenized.tokens[0];
    if !TYPE_PREFIXES.contains(&first.normalized.as_str()) {
        return None;
    }
    Some(RuleFinding::new(
        RuleId::Hungarian,
        cfg,
        format!("type prefix `{}` (Hungarian notation)", first.text),
        vec![first.text.clone()],
    ))
}

pub fn applicable_rules(
    record: &IdentifierRecord,
    tokenized: &TokenizedName,
    cfg: &RuleConfig,
) -> BTreeSet<RuleId> {
    RuleId::ALL
        .into_iter()
        .filter(|&rule| cfg.is_enabled(rule))
        .filter(|&rule| match rule {
            RuleId::Grammar => tokenized.is_multi_token(),
            RuleId::PrefixSuffix => !cfg.languages_without_namespaces.contains(&record.language),
            RuleId::Length => !(cfg.test_exemption && record.kind == Kind::Test),
            _ => true,
        })
        .collect()
}

/// `1 − failed weight / applicable weight`; 1 when nothing applies.
pub fn score(applicable: &BTreeSet<RuleId>, findings: &[RuleFinding], cfg: &RuleConfig) -> f64 {
    let total: f64 = applicable.iter().map(|&r| cfg.weight(r)).sum();
    if total <= 0.0 {
        return 1.0;
    }
    let failed: BTreeSet<RuleId> = findings
        .iter()
        .map(|f| f.rule)
        .filter(|r| applicable.contains(r))
        .collect();
    let lost: f64 = failed.iter().map(|&r| cfg.weight(r)).sum();
    (1.0 - lost / total).clamp(0.0, 1.0)
}

/// Tokenize, tag and run every enabled, applicable rule for one name.
pub fn evaluate(
    record: &IdentifierRecord,
    lexicon: &Lexicon,
    cfg: &RuleConfig,
    corpus_style: Option<NamingStyle>,
) -> NameReport {
    let tokenized = split(&record.name);
    let tagged = tag(&tokenized, lexicon);
    let pattern = classify_pattern(&tagged);
    let applicable = applicable_rules(record, &tokenized, cfg);

    let mut findings = Vec::new();
    for &rule in &applicable {
        let finding = match rule {
            RuleId::Style => check_style(&tokenized, cfg, corpus_style),
            RuleId::Grammar => check_grammar(pattern, &tokenized, cfg),
            RuleId::Verb => check_verb(pattern, &tagged, cfg),
            RuleId::Dictionary => check_dictionary(&tokenized, lexicon, cfg),
            RuleId::FullWords => check_full_words(&tokenized, cfg),
            RuleId::Slang => check_slang(&tokenized, lexicon, cfg),
            RuleId::Abbreviation => check_abbreviations(&tokenized, lexicon, cfg),
            RuleId::Acronym => check_acronyms(&tokenized, lexicon, cfg),
            RuleId::PrefixSuffix => check_prefix_suffix(record, &tokenized, lexicon, cfg),
            RuleId::Length => check_length(record, &tokenized, cfg),
            RuleId::Hungarian => check_hungarian(&tokenized, cfg),
        };
        findings.extend(finding);
    }
    let score = score(&applicable, &findings, cfg);
    NameReport {
        record: record.clone(),
        tokenized,
        tags: tagged.tags,
        pattern,
        findings,
        applicable,
        score,
    }
}

/// Reference text for `explain`.
pub struct RuleInfo {
    pub statement: &'static str,
    pub compliant: &'static [&'static str],
    pub non_compliant: &'static [&'static str],
}

pub fn rule_info(rule: RuleId) -> RuleInfo {
    let (statement, compliant, non_compliant): (&str, &[&str], &[&str]) = match rule {
        RuleId::Style => (
            "Compose multi-word method names in one naming style (camelCase, PascalCase, under_score or kebab-case) used consistently across the project.",
            &["getFullName", "getScriptState", "call_with_default", "garbage_collection", "check_static_allocation_size"],
            &["getfullName", "getscriptstate"],
        ),
        RuleId::Grammar => (
            "A name made of several words must form a grammatical phrase in which the words modify a head noun, optionally led by a verb or followed by a prepositional phrase.",
            &["registerManagedResource"],
            &["managedResourceRegister"],
        ),
        RuleId::Verb => (
            "Method names denote actions and should contain a verb(s) or verb phrase. Verb-less accessor names are reported at INFO level when the accessor exemption is on.",
            &["manage_caching_sizes", "computeProductBlockingSizes", "get_cached_node"],
            &["x_cached_node"],
        ),
        RuleId::Dictionary => (
            "Every word should be a natural-language dictionary word or a familiar domain term.",
            &["findLength"],
            &["abcdefg", "cccc", "aa2020"],
        ),
        RuleId::FullWords => (
            "Spell out full words; a single letter does not say what the method does.",
            &["dbConnection"],
            &["c", "x1"],
        ),
        RuleId::Slang => (
            "Leave out personal expressions, idioms and slang; their meaning depends on the author.",
            &["computeProductBlockingSizes"],
            &["fido", "cutting_corners", "CurveBall"],
        ),
        RuleId::Abbreviation => (
            "Abbreviate only with forms colleagues recognise. An abbreviation with more than one plausible expansion is poor.",
            &["getStr", "pyConnection", "get_algo", "db_connection"],
            &["repr", "getProtoNameNode"],
        ),
        RuleId::Acronym => (
            "Use only standard acronyms that the organization or domain already knows.",
            &["GUI_interface", "get_URL", "get_FIFO", "DOM_tree"],
            &["get_QWE", "SendAAAAA"],
        ),
        RuleId::PrefixSuffix => (
            "Do not prefix or suffix a method name with a term naming the system or subsystem. Languages without namespaces, such as C, are exempt.",
            &["getItemPath"],
            &["gimpItemGetPath", "swift_stdlib_u_char"],
        ),
        RuleId::Length => (
            "Limit the number of words in a name. Numbers do not count as words, and test methods may be exempted.",
            &["getFullName"],
            &["returnFalseIfNoSetterWasFoundAndIfReportNoSetterFoundIsFalse"],
        ),
        RuleId::Hungarian => (
            "Do not encode a type in a name's prefix (Hungarian notation). Disabled by default.",
            &["isValid", "getName"],
            &["boolIsValid", "stringGetName"],
        ),
    };
    RuleInfo {
        statement,
        compliant,
        non_compliant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(name: &str) -> IdentifierRecord {
        IdentifierRecord::new(name, "src/A.java", 1)
            .unwrap()
            .with_language("java")
    }

    fn eval(name: &str) -> NameReport {
        evaluate(
            &record(name),
            Lexicon::builtin(),
            &RuleConfig::default(),
            None,
        )
    }

    fn rules_failed(name: &str) -> Vec<RuleId> {
        eval(name).findings.iter().map(|f| f.rule).collect()
    }

    #[test]
    fn rule_ids_round_trip() {
        for rule in RuleId::ALL {
            assert_eq!(rule.as_str().parse::<RuleId>().unwrap(), rule);
        }
        assert_eq!("r3".parse::<RuleId>().unwrap(), RuleId::Verb);
        assert_eq!("R10".parse::<RuleId>().unwrap(), RuleId::Length);
        assert!("R99".parse::<RuleId>().is_err());
    }

    #[test]
    fn severity_follows_weight() {
        let cfg = RuleConfig::default();
        assert_eq!(cfg.severity(RuleId::Style), Severity::Error);
        assert_eq!(cfg.severity(RuleId::Acronym), Severity::Error);
        assert_eq!(cfg.severity(RuleId::Abbreviation), Severity::Warn);
        assert_eq!(cfg.severity(RuleId::Grammar), Severity::Warn);
        let cfg = RuleConfig {
            downgrade_low_consensus: true,
            ..RuleConfig::default()
        };
        assert_eq!(cfg.severity(RuleId::Grammar), Severity::Info);
        assert_eq!(cfg.severity(RuleId::Slang), Severity::Warn);
    }

    #[test]
    fn config_validation() {
        assert!(RuleConfig::default().validate().is_ok());
        let bad = RuleConfig {
            soft_words: 8,
            ..RuleConfig::default()
        };
        assert!(bad.validate().is_err());
        let mut bad = RuleConfig::default();
        bad.weights.insert(RuleId::Verb, 0.0);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn style_rule() {
        let cfg = RuleConfig::default();
        assert!(check_style(&split("getFullName"), &cfg, Some(NamingStyle::Camel)).is_none());
        assert!(
            check_style(&split("garbage_collection"), &cfg, Some(NamingStyle::Camel)).is_some()
        );
        assert!(check_style(&split("x"), &cfg, Some(NamingStyle::Snake)).is_none());
        assert!(check_style(&split("get_fullName"), &cfg, None).is_some());
        let loose = RuleConfig {
            camel_pascal_equivalent: true,
            ..RuleConfig::default()
        };
        assert!(check_style(&split("GetFullName"), &cfg, Some(NamingStyle::Camel)).is_some());
        assert!(check_style(&split("GetFullName"), &loose, Some(NamingStyle::Camel)).is_none());
    }

    #[test]
    fn grammar_rule() {
        assert!(!eval("registerManagedResource").fails(RuleId::Grammar));
        assert!(eval("managedResourceRegister").fails(RuleId::Grammar));
        let single = eval("length");
        assert!(!single.applicable.contains(&RuleId::Grammar));
        assert!(!single.fails(RuleId::Grammar));
    }

    #[test]
    fn verb_rule() {
        assert!(!eval("manage_caching_sizes").fails(RuleId::Verb));
        let x = eval("x_cached_node");
        assert_eq!(x.finding(RuleId::Verb).unwrap().severity, Severity::Warn);
        let length = eval("length");
        assert_eq!(
            length.finding(RuleId::Verb).unwrap().severity,
            Severity::Info
        );
        let strict = RuleConfig {
            accessor_exemption: false,
            ..RuleConfig::default()
        };
        let report = evaluate(&record("length"), Lexicon::builtin(), &strict, None);
        assert_eq!(
            report.finding(RuleId::Verb).unwrap().severity,
            Severity::Warn
        );
    }

    #[test]
    fn dictionary_rule() {
        assert!(!eval("findLength").fails(RuleId::Dictionary));
        assert_eq!(
            eval("abcdefg")
                .finding(RuleId::Dictionary)
                .unwrap()
                .evidence,
            ["abcdefg"]
        );
        assert_eq!(
            eval("aa2020").finding(RuleId::Dictionary).unwrap().evidence,
            ["aa", "2020"]
        );
    }

    #[test]
    fn full_words_rule() {
        assert!(!eval("dbConnection").fails(RuleId::FullWords));
        assert_eq!(
            eval("c").finding(RuleId::FullWords).unwrap().evidence,
            ["c"]
        );
        assert_eq!(
            eval("x_cached_node")
                .finding(RuleId::FullWords)
                .unwrap()
                .evidence,
            ["x"]
        );
    }

    #[test]
    fn slang_rule() {
        assert!(eval("fido").fails(RuleId::Slang));
        assert_eq!(
            eval("cutting_corners")
                .finding(RuleId::Slang)
                .unwrap()
                .evidence,
            ["cutting corners"]
        );
        assert!(eval("CurveBall").fails(RuleId::Slang));
        assert!(!eval("computeProductBlockingSizes").fails(RuleId::Slang));
    }

    #[test]
    fn abbreviation_rule() {
        assert!(!eval("get_algo").fails(RuleId::Abbreviation));
        let repr = eval("repr");
        let finding = repr.finding(RuleId::Abbreviation).unwrap();
        assert!(finding.message.contains("repair") && finding.message.contains("representation"));
        let proto = eval("getProtoNameNode");
        let finding = proto.finding(RuleId::Abbreviation).unwrap();
        assert_eq!(finding.evidence, ["Proto"]);
        assert!(finding.message.contains("protocol") && finding.message.contains("prototype"));
    }

    #[test]
    fn acronym_rule() {
        assert!(!eval("get_URL").fails(RuleId::Acronym));
        assert_eq!(
            eval("get_QWE").finding(RuleId::Acronym).unwrap().evidence,
            ["QWE"]
        );
        assert_eq!(
            eval("SendAAAAA").finding(RuleId::Acronym).unwrap().evidence,
            ["AAAAA"]
        );
    }

    #[test]
    fn prefix_suffix_rule() {
        let mut lex = Lexicon::builtin().clone();
        lex.add_project_term("gimp");
        lex.add_project_term("swift");
        let cfg = RuleConfig::default();
        let java = record("gimpItemGetPath");
        assert!(check_prefix_suffix(&java, &split("gimpItemGetPath"), &lex, &cfg).is_some());
        let c = record("gimpItemGetPath").with_language("c");
        assert!(check_prefix_suffix(&c, &split("gimpItemGetPath"), &lex, &cfg).is_none());
        let swift = record("swift_stdlib_u_char");
        assert!(check_prefix_suffix(&swift, &split("swift_stdlib_u_char"), &lex, &cfg).is_some());
    }

    #[test]
    fn prefix_from_container_and_hints() {
        let lex = Lexicon::builtin();
        let cfg = RuleConfig::default();
        let rec = record("itemTreeInsert").with_container(Some("ItemTree"));
        let f = check_prefix_suffix(&rec, &split("itemTreeInsert"), lex, &cfg).unwrap();
        assert_eq!(f.evidence, ["itemTree"]);
        let mut rec = record("visDrawFrame");
        rec.project_terms_hint = vec!["vis".into()];
        assert!(check_prefix_suffix(&rec, &split("visDrawFrame"), lex, &cfg).is_some());
    }

    #[test]
    fn length_rule() {
        let cfg = RuleConfig::default();
        let eight = split("oneTwoThreeFourFiveSixSevenEight");
        assert_eq!(
            check_length(&record("n"), &eight, &cfg).unwrap().severity,
            Severity::Error
        );
        let six = split("oneTwoThreeFourFiveSix");
        assert_eq!(
            check_length(&record("n"), &six, &cfg).unwrap().severity,
            Severity::Warn
        );
        let five = split("oneTwoThreeFourFive");
        assert!(check_length(&record("n"), &five, &cfg).is_none());
        let nine = split("oneTwoThreeFourFiveSixSevenEightNine");
        let test = record("n").with_kind(Kind::Test);
        assert!(check_length(&test, &nine, &cfg).is_none());
        let with_numbers = split("one2Two3Three4Four5Five");
        assert!(check_length(&record("n"), &with_numbers, &cfg).is_none());
    }

    #[test]
    fn hungarian_rule() {
        let mut cfg = RuleConfig::default();
        assert!(check_hungarian(&split("boolIsValid"), &cfg).is_none());
        cfg.enabled.insert(RuleId::Hungarian, true);
        assert!(check_hungarian(&split("boolIsValid"), &cfg).is_some());
        assert!(check_hungarian(&split("stringGetName"), &cfg).is_some());
        assert!(check_hungarian(&split("getFullName"), &cfg).is_none());
        assert!(check_hungarian(&split("bool"), &cfg).is_none());
    }

    #[test]
    fn clean_name_scores_one() {
        let report = eval("getFullName");
        assert!(report.findings.is_empty(), "{:?}", report.findings);
        assert_eq!(report.score, 1.0);
    }

    #[test]
    fn failing_style_only() {
        let report = evaluate(
            &record("getFullName"),
            Lexicon::builtin(),
            &RuleConfig::default(),
            Some(NamingStyle::Snake),
        );
        assert_eq!(report.applicable.len(), 10);
        assert_eq!(rules_of(&report), [RuleId::Style]);
        // 1 − 98.71 / 904.89, worked by hand.
        assert!(
            (report.score - 0.890_914_917_8).abs() < 1e-9,
            "{}",
            report.score
        );
    }

    fn rules_of(report: &NameReport) -> Vec<RuleId> {
        report.findings.iter().map(|f| f.rule).collect()
    }

    #[test]
    fn unknown_name_scores_below_one() {
        let report = eval("abcdefg");
        assert!(report.fails(RuleId::Dictionary));
        assert!(report.score < 1.0);
    }

    #[test]
    fn disabling_a_rule_removes_only_that_rule() {
        let base = eval("x_cached_node");
        let mut cfg = RuleConfig::default();
        cfg.enabled.insert(RuleId::FullWords, false);
        let reduced = evaluate(&record("x_cached_node"), Lexicon::builtin(), &cfg, None);
        let expect: Vec<_> = base
            .findings
            .iter()
            .filter(|f| f.rule != RuleId::FullWords)
            .cloned()
            .collect();
        assert_eq!(reduced.findings, expect);
        assert!(!reduced.applicable.contains(&RuleId::FullWords));
    }

    #[test]
    fn restyle_replaces_style_finding() {
        let cfg = RuleConfig::default();
        let mut report = eval("garbage_collection");
        let before: Vec<_> = report
            .findings
            .iter()
            .filter(|f| f.rule != RuleId::Style)
            .cloned()
            .collect();
        report.restyle(Some(NamingStyle::Camel), &cfg);
        assert!(report.fails(RuleId::Style));
        report.restyle(Some(NamingStyle::Snake), &cfg);
        assert!(!report.fails(RuleId::Style));
        assert_eq!(report.findings, before);
    }

    #[test]
    fn failed_rules_list() {
        assert_eq!(rules_failed("getFullName"), Vec::<RuleId>::new());
    }
}
