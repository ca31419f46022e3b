//! Corpus-level analytics and report merging.

use std::collections::BTreeMap;

use crate::ingest::IdentifierRecord;
use crate::rules::{NameReport, RuleConfig, RuleId};
use crate::tokenizer::{split, NamingStyle, TokenizedName};

/// Leading verbs that never count as system prefixes.
pub const COMMON_VERBS: [&str; 10] = [
    "get", "set", "is", "has", "add", "remove", "create", "delete", "find", "compute",
];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CorpusReport {
    pub reports: Vec<NameReport>,
    pub style_counts: BTreeMap<NamingStyle, usize>,
    pub dominant_style: Option<NamingStyle>,
    /// Word count (numbers excluded) → number of names.
    pub length_histogram: BTreeMap<usize, usize>,
    /// First-token counts over multi-token names, before verb exclusion and
    /// thresholding, so that merging loses nothing.
    pub prefix_counts: BTreeMap<String, usize>,
    pub totals: BTreeMap<RuleId, usize>,
    pub mean_score: Option<f64>,
}

impl CorpusReport {
    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }

    pub fn finding_count(&self) -> usize {
        self.totals.values().sum()
    }

    pub fn prefix_candidates(&self, min_count: usize) -> Vec<(String, usize)> {
        candidates(&self.prefix_counts, min_count)
    }

    /// Names whose style differs from the dominant one.
    pub fn deviants(&self) -> usize {
        match self.dominant_style {
            Some(dominant) => self
                .style_counts
                .iter()
                .filter(|(s, _)| s.is_composite() && **s != dominant)
                .map(|(_, n)| n)
                .sum(),
            None => 0,
        }
    }

    /// Sort reports by (path, line, name) so output never depends on
    /// evaluation order.
    pub fn canonicalize(&mut self) {
        self.reports.sort_by(|a, b| {
            let key =
                |r: &NameReport| (r.record.path.clone(), r.record.line, r.record.name.clone());
            key(a).cmp(&key(b)).then_with(|| a.record.cmp(&b.record))
        });
    }

    fn refresh(&mut self) {
        self.dominant_style = dominant(&self.style_counts);
        self.totals = totals(&self.reports);
        self.mean_score = mean(&self.reports);
    }
}

fn dominant(counts: &BTreeMap<NamingStyle, usize>) -> Option<NamingStyle> {
    let mut best: Option<(NamingStyle, usize)> = None;
    for style in NamingStyle::COMPOSITE {
        let n = counts.get(&style).copied().unwrap_or(0);
        if n > 0 && best.is_none_or(|(_, m)| n > m) {
            best = Some((style, n));
        }
    }
    best.map(|(s, _)| s)
}

fn totals(reports: &[NameReport]) -> BTreeMap<RuleId, usize> {
    let mut totals = BTreeMap::new();
    for f in reports.iter().flat_map(|r| &r.findings) {
        *totals.entry(f.rule).or_insert(0) += 1;
    }
    totals
}

/// Mean over sorted scores, so the result is independent of report order.
fn mean(reports: &[NameReport]) -> Option<f64> {
    if reports.is_empty() {
        return None;
    }
    let mut scores: Vec<f64> = reports.iter().map(|r| r.score).collect();
    scores.sort_by(f64::total_cmp);
    Some(scores.iter().sum::<f64>() / scores.len() as f64)
}

fn count_prefix(counts: &mut BTreeMap<String, usize>, tokenized: &TokenizedName) {
    if tokenized.is_multi_token() {
        *counts
            .entry(tokenized.tokens[0].normalized.clone())
            .or_insert(0) += 1;
    }
}

fn candidates(counts: &BTreeMap<String, usize>, min_count: usize) -> Vec<(String, usize)> {
    let min_count = min_count.max(2);
    let mut out: Vec<(String, usize)> = counts
        .iter()
        .filter(|(t, n)| **n >= min_count && !COMMON_VERBS.contains(&t.as_str()))
        .map(|(t, n)| (t.clone(), *n))
        .collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}

pub fn aggregate(reports: Vec<NameReport>) -> CorpusReport {
    let mut corpus = CorpusReport::default();
    for r in &reports {
        *corpus.style_counts.entry(r.tokenized.style).or_insert(0) += 1;
        *corpus
            .length_histogram
            .entry(r.tokenized.word_count())
            .or_insert(0) += 1;
        count_prefix(&mut corpus.prefix_counts, &r.tokenized);
    }
    corpus.reports = reports;
    corpus.refresh();
    corpus
}

/// Re-judge naming style against the corpus convention (or the configured
/// override). Only style findings change.
pub fn restyle_pass(
    reports: Vec<NameReport>,
    dominant: NamingStyle,
    cfg: &RuleConfig,
) -> Vec<NameReport> {
    let target = cfg.style_override.unwrap_or(dominant);
    reports
        .into_iter()
        .map(|mut r| {
            r.restyle(Some(target), cfg);
            r
        })
        .collect()
}

/// Apply `restyle_pass` in place against the corpus's own dominant style.
pub fn restyle_corpus(corpus: CorpusReport, cfg: &RuleConfig) -> CorpusReport {
    let target = match cfg.style_override.or(corpus.dominant_style) {
        Some(t) => t,
        None => return corpus,
    };
    let mut corpus = corpus;
    corpus.reports = restyle_pass(std::mem::take(&mut corpus.reports), target, cfg);
    corpus.refresh();
    corpus
}

/// Advisory system-prefix candidates: frequent first tokens of multi-token
/// names, common verbs excluded.
pub fn prefix_frequency(records: &[IdentifierRecord], min_count: usize) -> Vec<(String, usize)> {
    let mut counts = BTreeMap::new();
    for r in records {
        count_prefix(&mut counts, &split(&r.name));
    }
    candidates(&counts, min_count)
}

fn add_counts<K: Ord + Clone>(into: &mut BTreeMap<K, usize>, from: &BTreeMap<K, usize>) {
    for (k, n) in from {
        *into.entry(k.clone()).or_insert(0) += n;
    }
}

pub fn merge(a: CorpusReport, b: CorpusReport) -> CorpusReport {
    let mut out = a;
    add_counts(&mut out.style_counts, &b.style_counts);
    add_counts(&mut out.length_histogram, &b.length_histogram);
    add_counts(&mut out.prefix_counts, &b.prefix_counts);
    out.reports.extend(b.reports);
    out.refresh();
    out
}
