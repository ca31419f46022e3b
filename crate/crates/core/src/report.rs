//! Text and machine renderings of a corpus report, and exit codes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::corpus::CorpusReport;
use crate::error::{Error, Result};
use crate::rules::{NameReport, RuleFinding, Severity};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Machine,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "machine" | "json" => Ok(Format::Machine),
            _ => Err(Error::Config(format!(
                "unknown format `{s}` (expected text or machine)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailOn {
    #[default]
    Error,
    Warn,
    Never,
}

impl FromStr for FailOn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "error" => Ok(FailOn::Error),
            "warn" | "warning" => Ok(FailOn::Warn),
            "never" => Ok(FailOn::Never),
            _ => Err(Error::Config(format!(
                "unknown fail-on level `{s}` (expected error, warn or never)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub fail_on: FailOn,
    pub top_n: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: Format::Text,
            fail_on: FailOn::Error,
            top_n: 10,
        }
    }
}

/// Findings in output order: (path, line, rule), then name and message.
pub fn ordered_findings(report: &CorpusReport) -> Vec<(&NameReport, &RuleFinding)> {
    let mut out: Vec<_> = report
        .reports
        .iter()
        .flat_map(|r| r.findings.iter().map(move |f| (r, f)))
        .collect();
    out.sort_by(|(ra, fa), (rb, fb)| {
        (
            &ra.record.path,
            ra.record.line,
            fa.rule,
            &ra.record.name,
            &fa.message,
        )
            .cmp(&(
                &rb.record.path,
                rb.record.line,
                fb.rule,
                &rb.record.name,
                &fb.message,
            ))
    });
    out
}

fn severity_counts(report: &CorpusReport) -> [usize; 3] {
    let mut counts = [0; 3];
    for f in report.reports.iter().flat_map(|r| &r.findings) {
        counts[f.severity as usize] += 1;
    }
    counts
}

fn analytics_value(report: &CorpusReport, top_n: usize) -> Value {
    let styles: Map<String, Value> = report
        .style_counts
        .iter()
        .map(|(s, n)| (s.as_str().to_string(), json!(n)))
        .collect();
    let histogram: Vec<Value> = report
        .length_histogram
        .iter()
        .map(|(w, n)| json!({"words": w, "count": n}))
        .collect();
    let prefixes: Vec<Value> = report
        .prefix_candidates(2)
        .into_iter()
        .take(top_n)
        .map(|(t, n)| json!({"token": t, "count": n}))
        .collect();
    json!({
        "dominant_style": report.dominant_style.map(|s| s.as_str()),
        "style_counts": styles,
        "style_deviants": report.deviants(),
        "length_histogram": histogram,
        "prefix_candidates": prefixes,
    })
}

fn summary_value(report: &CorpusReport) -> Value {
    let [errors, warnings, info] = severity_counts(report);
    let by_rule: Map<String, Value> = report
        .totals
        .iter()
        .map(|(r, n)| (r.as_str().to_string(), json!(n)))
        .collect();
    let mut summary = json!({
        "names": report.len(),
        "findings": report.finding_count(),
        "by_rule": by_rule,
        "by_severity": {"ERROR": errors, "WARN": warnings, "INFO": info},
    });
    if let Some(mean) = report.mean_score {
        summary["mean_score"] = json!(mean);
    }
    summary
}

fn finding_value(r: &NameReport, f: &RuleFinding) -> Value {
    json!({
        "path": r.record.path,
        "line": r.record.line,
        "name": r.record.name,
        "rule": f.rule.as_str(),
        "severity": f.severity.as_str(),
        "weight": f.weight,
        "message": f.message,
        "evidence": f.evidence,
    })
}

/// The machine document as a value tree, before canonical serialization.
pub fn machine_value(report: &CorpusReport, top_n: usize) -> Value {
    let findings: Vec<Value> = ordered_findings(report)
        .into_iter()
        .map(|(r, f)| finding_value(r, f))
        .collect();
    json!({
        "version": SCHEMA_VERSION,
        "summary": summary_value(report),
        "findings": findings,
        "analytics": analytics_value(report, top_n),
    })
}

/// Compact JSON with sorted keys and every float written with four decimals.
pub fn write_canonical(value: &Value, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) => write!(out, "{u}").unwrap(),
            (_, Some(i), _) => write!(out, "{i}").unwrap(),
            (_, _, Some(f)) => write!(out, "{f:.4}").unwrap(),
            _ => out.push_str("null"),
        },
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("string serializes")),
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_canonical(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, key) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(key).expect("string serializes"));
                out.push(':');
                write_canonical(&map[key], out);
            }
            out.push('}');
        }
    }
}

pub fn render_machine(report: &CorpusReport) -> Vec<u8> {
    render_machine_with(report, RenderOptions::default().top_n)
}

pub fn render_machine_with(report: &CorpusReport, top_n: usize) -> Vec<u8> {
    let mut out = String::new();
    write_canonical(&machine_value(report, top_n), &mut out);
    out.push('\n');
    out.into_bytes()
}

fn summary_text(report: &CorpusReport, top_n: usize, out: &mut String) {
    let [errors, warnings, info] = severity_counts(report);
    let total = report.finding_count();
    writeln!(
        out,
        "{} names, {total} findings ({errors} errors, {warnings} warnings, {info} info)",
        report.len()
    )
    .unwrap();
    match report.dominant_style {
        Some(s) => writeln!(out, "dominant style: {s} ({} deviants)", report.deviants()).unwrap(),
        None => writeln!(out, "dominant style: none").unwrap(),
    }
    if let Some(mean) = report.mean_score {
        writeln!(out, "mean score: {mean:.4}").unwrap();
    }
    if !report.style_counts.is_empty() {
        let styles: Vec<String> = report
            .style_counts
            .iter()
            .map(|(s, n)| format!("{s} {n}"))
            .collect();
        writeln!(out, "styles: {}", styles.join(", ")).unwrap();
    }
    if let Some(&max) = report.length_histogram.keys().next_back() {
        writeln!(out, "words per name:").unwrap();
        for words in 1..=max {
            let n = report.length_histogram.get(&words).copied().unwrap_or(0);
            writeln!(out, "  {words:>3} | {n}").unwrap();
        }
    }
    let prefixes = report.prefix_candidates(2);
    if !prefixes.is_empty() {
        let shown: Vec<String> = prefixes
            .iter()
            .take(top_n)
            .map(|(t, n)| format!("{t} ({n})"))
            .collect();
        writeln!(out, "prefix candidates: {}", shown.join(", ")).unwrap();
    }
}

pub fn render_text(report: &CorpusReport, opts: &RenderOptions) -> String {
    let mut out = String::new();
    for (r, f) in ordered_findings(report) {
        writeln!(
            out,
            "{}:{}: [{}] {}: {} ({:.2})",
            r.record.path, r.record.line, f.rule, f.severity, f.message, f.weight
        )
        .unwrap();
    }
    if !out.is_empty() {
        out.push('\n');
    }
    summary_text(report, opts.top_n, &mut out);
    out
}

pub fn render(report: &CorpusReport, opts: &RenderOptions) -> Vec<u8> {
    match opts.format {
        Format::Text => render_text(report, opts).into_bytes(),
        Format::Machine => render_machine_with(report, opts.top_n),
    }
}

/// Analytics only: style distribution, histogram and prefix candidates.
pub fn render_analytics(report: &CorpusReport, opts: &RenderOptions) -> Vec<u8> {
    match opts.format {
        Format::Text => {
            let mut out = String::new();
            summary_text(report, opts.top_n, &mut out);
            out.into_bytes()
        }
        Format::Machine => {
            let doc = json!({
                "version": SCHEMA_VERSION,
                "summary": summary_value(report),
                "analytics": analytics_value(report, opts.top_n),
            });
            let mut out = String::new();
            write_canonical(&doc, &mut out);
            out.push('\n');
            out.into_bytes()
        }
    }
}

pub fn exit_code(report: &CorpusReport, opts: &RenderOptions) -> i32 {
    let qualifies = |s: Severity| match opts.fail_on {
        FailOn::Error => s == Severity::Error,
        FailOn::Warn => s != Severity::Info,
        FailOn::Never => false,
    };
    let failing = report
        .reports
        .iter()
        .flat_map(|r| &r.findings)
        .any(|f| qualifies(f.severity));
    i32::from(failing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::batch::analyze;
    use crate::ingest::IdentifierRecord;
    use crate::lexicon::Lexicon;
    use crate::rules::RuleConfig;

    fn corpus(names: &[&str]) -> CorpusReport {
        let recs: Vec<_> = names
            .iter()
            .enumerate()
            .map(|(i, n)| {
                IdentifierRecord::new(n, "src/a.java", i + 1)
                    .unwrap()
                    .with_language("java")
            })
            .collect();
        analyze(&recs, Lexicon::builtin(), &RuleConfig::default(), 1).unwrap()
    }

    #[test]
    fn canonical_writer() {
        let v = json!({"b": 1, "a": [0.5, -2, "x\"y"], "c": null, "d": 1.0});
        let mut s = String::new();
        write_canonical(&v, &mut s);
        assert_eq!(s, r#"{"a":[0.5000,-2,"x\"y"],"b":1,"c":null,"d":1.0000}"#);
    }

    #[test]
    fn machine_output_is_deterministic() {
        let c = corpus(&["abcdefg", "getFullName"]);
        assert_eq!(render_machine(&c), render_machine(&c));
        let text = String::from_utf8(render_machine(&c)).unwrap();
        assert!(text.ends_with('\n'));
        assert!(text.starts_with(r#"{"analytics":"#));
        assert!(text.contains(r#""evidence":["abcdefg"]"#));
        assert!(text.contains(r#""rule":"R4_DICTIONARY""#));
        assert!(text.contains(r#""version":"1""#));
        assert!(text.contains(r#""weight":97.2200"#));
    }

    #[test]
    fn empty_corpus_document() {
        let text = String::from_utf8(render_machine(&CorpusReport::default())).unwrap();
        assert!(text.contains(r#""findings":[]"#));
        assert!(!text.contains("mean_score"));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["summary"]["findings"], 0);
    }

    #[test]
    fn text_output() {
        let empty = render_text(&CorpusReport::default(), &RenderOptions::default());
        assert!(empty.contains("0 findings"));
        let c = corpus(&[
            "getFullName",
            "get_full_name",
            "getFirstName",
            "get2ndUserRecordId",
        ]);
        let text = render_text(&c, &RenderOptions::default());
        assert!(text.contains("src/a.java:2: [R1_STYLE]"), "{text}");
        for words in 1..=4 {
            assert!(text.contains(&format!("  {words:>3} | ")), "{text}");
        }
    }

    #[test]
    fn text_and_machine_agree_on_order() {
        let c = corpus(&["x_cached_node", "repr", "get_QWE", "abcdefg"]);
        let text = render_text(&c, &RenderOptions::default());
        let from_text: Vec<String> = text
            .lines()
            .take_while(|l| !l.is_empty())
            .map(|l| l.split(']').next().unwrap().to_string() + "]")
            .collect();
        let doc: Value = serde_json::from_slice(&render_machine(&c)).unwrap();
        let from_machine: Vec<String> = doc["findings"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| {
                format!(
                    "{}:{}: [{}]",
                    f["path"].as_str().unwrap(),
                    f["line"],
                    f["rule"].as_str().unwrap()
                )
            })
            .collect();
        assert_eq!(from_text, from_machine);
    }

    #[test]
    fn exit_codes() {
        let opts = |fail_on| RenderOptions {
            fail_on,
            ..RenderOptions::default()
        };
        assert_eq!(
            exit_code(&corpus(&["getFullName"]), &opts(FailOn::Error)),
            0
        );
        assert_eq!(exit_code(&corpus(&["get_QWE"]), &opts(FailOn::Error)), 1);
        let warn_only = corpus(&["getProtoNameNode"]);
        assert!(warn_only.reports[0]
            .findings
            .iter()
            .all(|f| f.severity != Severity::Error));
        assert_eq!(exit_code(&warn_only, &opts(FailOn::Error)), 0);
        assert_eq!(exit_code(&warn_only, &opts(FailOn::Warn)), 1);
        assert_eq!(exit_code(&warn_only, &opts(FailOn::Never)), 0);
    }

    #[test]
    fn options_parse() {
        assert_eq!("machine".parse::<Format>().unwrap(), Format::Machine);
        assert_eq!("WARN".parse::<FailOn>().unwrap(), FailOn::Warn);
        assert!("loud".parse::<FailOn>().is_err());
    }
}
