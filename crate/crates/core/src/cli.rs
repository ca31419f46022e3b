//! Command-line front end: configuration, input discovery and subcommands.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use globset::{Glob, GlobSet, GlobSetBuilder};
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::batch::analyze;
use crate::error::{Error, Result};
use crate::ingest::{
    check_language, classify_test_method, is_identifier_list, language_for_path,
    read_identifier_file, scan_source, IdentifierRecord, TestMatcher,
};
use crate::lexicon::{Lexicon, LexiconConfig};
use crate::report::{exit_code, render, render_analytics, FailOn, Format, RenderOptions};
use crate::rules::{evaluate, rule_info, RuleConfig, RuleId};
use crate::tokenizer::NamingStyle;

pub const CONFIG_FILE: &str = "namelint.config";
pub const CONFIG_ENV: &str = "NAMELINT_CONFIG";

/// Everything a run needs. Parsed from one TOML file; flags override it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AppConfig {
    pub rules: RuleConfig,
    pub lexicon: LexiconConfig,
    /// Globs, or regular expressions prefixed with `re:`, matched against
    /// name and path to mark test methods.
    pub test_patterns: Vec<String>,
    /// Path globs applied while walking directories. Empty means all.
    pub include: Vec<String>,
    pub exclude: Vec<String>,
    pub format: Format,
    pub fail_on: FailOn,
    pub top_n: usize,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
    /// Language for source files, or `auto` to go by extension.
    pub language: String,
}

impl Default for AppConfig {
    fn default() -> Self {
        AppConfig {
            rules: RuleConfig::default(),
            lexicon: LexiconConfig::default(),
            test_patterns: vec![
                "test*".into(),
                "Test*".into(),
                "**/test/**".into(),
                "**/tests/**".into(),
            ],
            include: Vec::new(),
            exclude: Vec::new(),
            format: Format::Text,
            fail_on: FailOn::Error,
            top_n: 10,
            jobs: 0,
            language: "auto".into(),
        }
    }
}

fn rebase(base: &Path, paths: &mut [PathBuf]) {
    for p in paths.iter_mut() {
        if p.is_relative() {
            *p = base.join(&*p);
        }
    }
}

impl AppConfig {
    pub fn from_toml(text: &str) -> Result<AppConfig> {
        let cfg: AppConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Read a config file. Relative lexicon paths resolve against its folder.
    pub fn from_file(path: &Path) -> Result<AppConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = AppConfig::from_toml(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let lex = &mut cfg.lexicon;
        for paths in [
            &mut lex.dirs,
            &mut lex.dictionary,
            &mut lex.pos,
            &mut lex.abbreviations,
            &mut lex.acronyms,
            &mut lex.slang,
            &mut lex.project_terms,
            &mut lex.domain_terms,
            &mut lex.removals,
        ] {
            rebase(base, paths);
        }
        Ok(cfg)
    }

    /// Config file precedence: `--config`, then `$NAMELINT_CONFIG`, then
    /// `./namelint.config` if present, else built-in defaults.
    pub fn resolve(flag: Option<&Path>, env: Option<OsString>) -> Result<AppConfig> {
        if let Some(path) = flag {
            return AppConfig::from_file(path);
        }
        if let Some(path) = env.filter(|p| !p.is_empty()) {
            return AppConfig::from_file(Path::new(&path));
        }
        let local = Path::new(CONFIG_FILE);
        if local.is_file() {
            return AppConfig::from_file(local);
        }
        Ok(AppConfig::default())
    }

    pub fn validate(&self) -> Result<()> {
        self.rules.validate()?;
        check_language(&self.language)?;
        if self.top_n == 0 {
            return Err(Error::Config("top_n must be positive".into()));
        }
        TestMatcher::new(&self.test_patterns)?;
        globs(&self.include)?;
        globs(&self.exclude)?;
        Ok(())
    }

    pub fn render_options(&self) -> RenderOptions {
        RenderOptions {
            format: self.format,
            fail_on: self.fail_on,
            top_n: self.top_n,
        }
    }
}

fn globs(patterns: &[String]) -> Result<GlobSet> {
    let mut builder = GlobSetBuilder::new();
    for p in patterns {
        let glob = Glob::new(p).map_err(|e| Error::Pattern {
            pattern: p.clone(),
            message: e.to_string(),
        })?;
        builder.add(glob);
    }
    builder.build().map_err(|e| Error::Config(e.to_string()))
}

/// Values given on the command line. Unset fields leave the file's value.
#[derive(Debug, Clone, Default, PartialEq, clap::Args)]
pub struct Overrides {
    /// Output format: text or machine.
    #[arg(long, global = true, value_name = "FORMAT")]
    pub format: Option<String>,
    /// Lowest severity that fails the run: error, warn or never.
    #[arg(long, global = true, value_name = "LEVEL")]
    pub fail_on: Option<String>,
    /// Word count above which a name is an error.
    #[arg(long, global = true, value_name = "N")]
    pub max_words: Option<usize>,
    /// Required naming style instead of the corpus's dominant one.
    #[arg(long, global = true, value_name = "STYLE")]
    pub style: Option<String>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Lexicon directory merged over the defaults (repeatable).
    #[arg(long, global = true, value_name = "PATH")]
    pub lexicon: Vec<PathBuf>,
    /// System or project term for the prefix/suffix rule (repeatable).
    #[arg(long = "project-term", global = true, value_name = "TERM")]
    pub project_terms: Vec<String>,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut AppConfig) -> Result<()> {
        if let Some(f) = &self.format {
            cfg.format = f.parse()?;
        }
        if let Some(f) = &self.fail_on {
            cfg.fail_on = f.parse()?;
        }
        if let Some(n) = self.max_words {
            cfg.rules.max_words = n;
            cfg.rules.soft_words = cfg.rules.soft_words.min(n);
        }
        if let Some(s) = &self.style {
            cfg.rules.style_override = Some(s.parse::<NamingStyle>()?);
        }
        if let Some(n) = self.jobs {
            cfg.jobs = n;
        }
        cfg.lexicon.dirs.extend(self.lexicon.iter().cloned());
        cfg.lexicon.terms.extend(self.project_terms.iter().cloned());
        cfg.validate()
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "namelint",
    version,
    about = "Check method names against naming standards"
)]
pub struct Cli {
    /// Configuration file (default: ./namelint.config or $NAMELINT_CONFIG).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub overrides: Overrides,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lint names in source files, directories or identifier lists.
    Check {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Show corpus analytics: styles, word counts, prefix candidates.
    Analyze {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Describe a rule.
    Explain { rule: String },
    /// Show how a single name is split, tagged and judged.
    Debug { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Outcome {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(err: &Error) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("namelint: {err}\n"),
        }
    }
}

fn walk_files(
    root: &Path,
    include: &GlobSet,
    exclude: &GlobSet,
    only_included: bool,
) -> Vec<PathBuf> {
    WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|e| match e {
            Ok(e) => Some(e),
            Err(err) => {
                log::warn!("{err}");
                None
            }
        })
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .filter(|p| {
            let rel = p.strip_prefix(root).unwrap_or(p);
            let included = if only_included {
                include.is_match(rel) || include.is_match(p)
            } else {
                is_identifier_list(p) || language_for_path(p).is_some()
            };
            included && !(exclude.is_match(rel) || exclude.is_match(p))
        })
        .collect()
}

/// Expand paths to files, read or scan them and mark test methods.
pub fn collect_records(paths: &[PathBuf], cfg: &AppConfig) -> Result<Vec<IdentifierRecord>> {
    let include = globs(&cfg.include)?;
    let exclude = globs(&cfg.exclude)?;
    let matcher = TestMatcher::new(&cfg.test_patterns)?;
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            files.extend(walk_files(
                path,
                &include,
                &exclude,
                !cfg.include.is_empty(),
            ));
        } else if path.is_file() {
            files.push(path.clone());
        } else {
            return Err(Error::Config(format!(
                "no such file or directory: {}",
                path.display()
            )));
        }
    }
    if files.is_empty() {
        return Err(Error::Config("no input files matched".into()));
    }
    let mut records = Vec::new();
    for file in &files {
        let found = if is_identifier_list(file) {
            read_identifier_file(file)?
        } else {
            scan_source(file, &cfg.language)?
        };
        records.extend(found.into_iter().map(|r| classify_test_method(r, &matcher)));
    }
    Ok(records)
}

fn corpus_for(paths: &[PathBuf], cfg: &AppConfig) -> Result<crate::corpus::CorpusReport> {
    let lexicon = Lexicon::load(&cfg.lexicon)?;
    let records = collect_records(paths, cfg)?;
    analyze(&records, &lexicon, &cfg.rules, cfg.jobs)
}

pub fn run_check(paths: &[PathBuf], cfg: &AppConfig) -> Outcome {
    match corpus_for(paths, cfg) {
        Ok(corpus) => {
            let opts = cfg.render_options();
            let out = String::from_utf8(render(&corpus, &opts)).expect("renderers emit UTF-8");
            Outcome::ok(exit_code(&corpus, &opts), out)
        }
        Err(e) => Outcome::failed(&e),
    }
}

pub fn run_analyze(paths: &[PathBuf], cfg: &AppConfig) -> Outcome {
    match corpus_for(paths, cfg) {
        Ok(corpus) => {
            let out = String::from_utf8(render_analytics(&corpus, &cfg.render_options()))
                .expect("renderers emit UTF-8");
            Outcome::ok(0, out)
        }
        Err(e) => Outcome::failed(&e),
    }
}

pub fn explain_text(rule: RuleId, cfg: &RuleConfig) -> String {
    let info = rule_info(rule);
    let mut out = String::new();
    writeln!(out, "{rule}").unwrap();
    writeln!(out, "  {}", info.statement).unwrap();
    writeln!(out, "  default weight: {:.2}", rule.default_weight()).unwrap();
    writeln!(out, "  severity: {}", cfg.severity(rule)).unwrap();
    if rule == RuleId::Length {
        writeln!(
            out,
            "  defaults: soft={} max={}",
            cfg.soft_words, cfg.max_words
        )
        .unwrap();
    }
    if !rule.enabled_by_default() {
        writeln!(out, "  disabled by default").unwrap();
    }
    writeln!(out, "  compliant: {}", info.compliant.join(", ")).unwrap();
    writeln!(out, "  non-compliant: {}", info.non_compliant.join(", ")).unwrap();
    out
}

pub fn run_explain(rule: &str) -> Outcome {
    match rule.parse::<RuleId>() {
        Ok(id) => Outcome::ok(0, explain_text(id, &RuleConfig::default())),
        Err(e) => Outcome::failed(&e),
    }
}

fn debug_text(name: &str, cfg: &AppConfig) -> Result<String> {
    let lexicon = Lexicon::load(&cfg.lexicon)?;
    let language = if cfg.language == "auto" {
        "unknown"
    } else {
        &cfg.language
    };
    let record = IdentifierRecord::new(name, "<debug>", 1)?.with_language(language);
    let report = evaluate(&record, &lexicon, &cfg.rules, cfg.rules.style_override);
    let mut out = String::new();
    writeln!(out, "name: {name}").unwrap();
    writeln!(out, "style: {}", report.tokenized.style).unwrap();
    writeln!(out, "tokens:").unwrap();
    for (token, tag) in report.tokenized.tokens.iter().zip(&report.tags) {
        let class = lexicon.classify(token);
        write!(
            out,
            "  {:<16} {:<13} {:<22} {}",
            token.text,
            token.kind.as_str(),
            class.as_str(),
            tag.as_str()
        )
        .unwrap();
        if let Some(exp) = class.expansions() {
            write!(out, "  ({})", exp.join(", ")).unwrap();
        }
        out.push('\n');
    }
    let tags: Vec<&str> = report.tags.iter().map(|t| t.as_str()).collect();
    writeln!(out, "tags: {}", tags.join(" ")).unwrap();
    writeln!(out, "pattern: {}", report.pattern.as_str()).unwrap();
    writeln!(out, "rules:").unwrap();
    for rule in RuleId::ALL {
        let verdict = if !report.applicable.contains(&rule) {
            "n/a".to_string()
        } else if let Some(f) = report.finding(rule) {
            format!("{} {}", f.severity, f.message)
        } else {
            "pass".to_string()
        };
        writeln!(out, "  {:<18} {verdict}", rule.as_str()).unwrap();
    }
    writeln!(out, "score: {:.4}", report.score).unwrap();
    Ok(out)
}

pub fn run_debug(name: &str, cfg: &AppConfig) -> Outcome {
    match debug_text(name, cfg) {
        Ok(out) => Outcome::ok(0, out),
        Err(e) => Outcome::failed(&e),
    }
}

/// Parse arguments and run. `env_config` stands in for `$NAMELINT_CONFIG`.
pub fn run_with_env<I, T>(args: I, env_config: Option<OsString>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(0, text)
            };
        }
    };
    if let Command::Explain { rule } = &cli.command {
        return run_explain(rule);
    }
    let mut cfg = match AppConfig::resolve(cli.config.as_deref(), env_config) {
        Ok(cfg) => cfg,
        Err(e) => return Outcome::failed(&e),
    };
    if let Err(e) = cli.overrides.apply(&mut cfg) {
        return Outcome::failed(&e);
    }
    match &cli.command {
        Command::Check { paths } => run_check(paths, &cfg),
        Command::Analyze { paths } => run_analyze(paths, &cfg),
        Command::Debug { name } => run_debug(name, &cfg),
        Command::Explain { .. } => unreachable!("handled above"),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var_os(CONFIG_ENV))
}
