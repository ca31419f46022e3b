//! Identifier records from pre-extracted lists or lexical source scanning.
//!
//! The scanners are signature heuristics (keyword, name, parenthesis), not
//! parsers. Constructors, destructors and operator overloads are skipped.

use std::path::Path;
use std::sync::LazyLock;

use globset::{GlobBuilder, GlobMatcher};
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    #[default]
    Method,
    Function,
    Test,
    Unknown,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Method => "method",
            Kind::Function => "function",
            Kind::Test => "test",
            Kind::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentifierRecord {
    pub name: String,
    pub kind: Kind,
    pub language: String,
    pub path: String,
    pub line: usize,
    pub container: Option<String>,
    pub project_terms_hint: Vec<String>,
}

impl IdentifierRecord {
    pub fn new(name: &str, path: &str, line: usize) -> Result<IdentifierRecord> {
        validate_name(name)?;
        if line == 0 {
            return Err(Error::Config(format!(
                "line numbers start at 1 (record `{name}`)"
            )));
        }
        Ok(IdentifierRecord {
            name: name.to_string(),
            kind: Kind::Method,
            language: "unknown".to_string(),
            path: path.to_string(),
            line,
            container: None,
            project_terms_hint: Vec::new(),
        })
    }

    pub fn with_language(mut self, language: &str) -> Self {
        self.language = language.to_string();
        self
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_container(mut self, container: Option<&str>) -> Self {
        self.container = container.map(str::to_string);
        self
    }
}

/// Names are non-empty ASCII letters, digits, `_` and `-`, with at least
/// one letter or digit.
pub fn validate_name(name: &str) -> Result<()> {
    let charset = name
        .bytes()
        .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-');
    if name.is_empty() || !charset || !name.bytes().any(|b| b.is_ascii_alphanumeric()) {
        return Err(Error::InvalidIdentifier(name.to_string()));
    }
    Ok(())
}

pub const LANGUAGES: [&str; 8] = [
    "c",
    "cpp",
    "java",
    "csharp",
    "python",
    "javascript",
    "go",
    "rust",
];

pub fn check_language(tag: &str) -> Result<()> {
    if tag == "auto" || LANGUAGES.contains(&tag) {
        Ok(())
    } else {
        Err(Error::UnsupportedLanguage(tag.to_string()))
    }
}

/// Language tag for a source file extension.
pub fn language_for_path(path: &Path) -> Option<&'static str> {
    let ext = path.extension()?.to_str()?.to_ascii_lowercase();
    Some(match ext.as_str() {
        "c" | "h" => "c",
        "cc" | "cpp" | "cxx" | "hpp" | "hh" | "hxx" => "cpp",
        "java" => "java",
        "cs" => "csharp",
        "py" => "python",
        "js" | "mjs" | "cjs" | "jsx" | "ts" | "tsx" => "javascript",
        "go" => "go",
        "rs" => "rust",
        _ => return None,
    })
}

/// True for line-delimited identifier list files.
pub fn is_identifier_list(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("jsonl" | "ndjson")
    )
}

#[derive(Deserialize)]
struct RawRecord {
    name: Option<String>,
    kind: Option<Kind>,
    language: Option<String>,
    path: Option<String>,
    line: Option<usize>,
    container: Option<String>,
    #[serde(default)]
    project_terms: Vec<String>,
}

/// Parse identifier-list text. Records without `path`/`line` point at the
/// list file itself.
pub fn parse_identifier_lines(text: &str, source: &Path) -> Result<Vec<IdentifierRecord>> {
    let mut records = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let number = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(line)
            .map_err(|e| Error::malformed(source, number, e.to_string()))?;
        let Some(name) = raw.name else {
            return Err(Error::malformed(
                source,
                number,
                "missing required field `name`",
            ));
        };
        validate_name(&name).map_err(|e| Error::malformed(source, number, e.to_string()))?;
        let at = raw.line.unwrap_or(number);
        if at == 0 {
            return Err(Error::malformed(
                source,
                number,
                "`line` must be at least 1",
            ));
        }
        records.push(IdentifierRecord {
            name,
            kind: raw.kind.unwrap_or_default(),
            language: raw.language.unwrap_or_else(|| "unknown".to_string()),
            path: raw
                .path
                .unwrap_or_else(|| source.to_string_lossy().into_owned()),
            line: at,
            container: raw.container,
            project_terms_hint: raw.project_terms,
        });
    }
    Ok(records)
}

pub fn read_identifier_file(path: &Path) -> Result<Vec<IdentifierRecord>> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|e| {
        Error::io(
            path,
            std::io::Error::new(std::io::ErrorKind::InvalidData, e),
        )
    })?;
    parse_identifier_lines(&text, path)
}

/// Scan one source file. With `language = "auto"` the extension decides;
/// files with unknown extensions yield nothing.
pub fn scan_source(path: &Path, language: &str) -> Result<Vec<IdentifierRecord>> {
    check_language(language)?;
    let language = if language == "auto" {
        match language_for_path(path) {
            Some(tag) => tag,
            None => {
                log::warn!("skipping {}: unknown source extension", path.display());
                return Ok(Vec::new());
            }
        }
    } else {
        language
    };
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let text = String::from_utf8_lossy(&bytes);
    scan_text(&text, language, &path.to_string_lossy())
}

/// Scan source text already in memory.
pub fn scan_text(text: &str, language: &str, path: &str) -> Result<Vec<IdentifierRecord>> {
    check_language(language)?;
    let found = match language {
        "python" => scan_python(text),
        "go" => scan_go(text),
        _ => scan_braced(text, language),
    };
    let mut records = Vec::with_capacity(found.len());
    for (line, name, container) in found {
        if validate_name(&name).is_err() {
            continue;
        }
        let kind = if container.is_some() {
            Kind::Method
        } else {
            Kind::Function
        };
        records.push(IdentifierRecord {
            name,
            kind,
            language: language.to_string(),
            path: path.to_string(),
            line,
            container,
            project_terms_hint: Vec::new(),
        });
    }
    Ok(records)
}

type Found = (usize, String, Option<String>);

fn regex(pattern: &str) -> Regex {
    Regex::new(pattern).expect("scanner pattern compiles")
}

fn scan_python(text: &str) -> Vec<Found> {
    static DEF: LazyLock<Regex> =
        LazyLock::new(|| regex(r"^(\s*)(?:async\s+)?def\s+([A-Za-z_]\w*)\s*\("));
    static CLASS: LazyLock<Regex> = LazyLock::new(|| regex(r"^(\s*)class\s+([A-Za-z_]\w*)"));
    let mut classes: Vec<(usize, String)> = Vec::new();
    let mut found = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.len() - trimmed.len();
        while classes.last().is_some_and(|(i, _)| *i >= indent) {
            classes.pop();
        }
        if let Some(c) = CLASS.captures(line) {
            classes.push((indent, c[2].to_string()));
        } else if let Some(c) = DEF.captures(line) {
            let name = &c[2];
            // Dunder methods are constructors and operator hooks.
            if name.starts_with("__") && name.ends_with("__") && name.len() > 4 {
                continue;
            }
            found.push((
                index + 1,
                name.to_string(),
                classes.last().map(|(_, n)| n.clone()),
            ));
        }
    }
    found
}

fn scan_go(text: &str) -> Vec<Found> {
    static FUNC: LazyLock<Regex> = LazyLock::new(|| {
        regex(
            r"^\s*func\s+(?:\(\s*(?:[A-Za-z_]\w*\s+)?\*?\s*([A-Za-z_]\w*)[^)]*\)\s*)?([A-Za-z_]\w*)\s*[\[(]",
        )
    });
    text.lines()
        .enumerate()
        .filter_map(|(index, line)| {
            let c = FUNC.captures(line)?;
            Some((
                index + 1,
                c[2].to_string(),
                c.get(1).map(|m| m.as_str().to_string()),
            ))
        })
        .collect()
}

const NOT_A_TYPE: [&str; 14] = [
    "return", "else", "new", "delete", "throw", "case", "goto", "sizeof", "await", "yield",
    "using", "typedef", "if", "while",
];

const MODIFIERS: [&str; 22] = [
    "public",
    "private",
    "protected",
    "internal",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "virtual",
    "override",
    "async",
    "sealed",
    "extern",
    "unsafe",
    "partial",
    "default",
    "strictfp",
    "inline",
    "explicit",
    "friend",
    "constexpr",
];

const JS_KEYWORDS: [&str; 10] = [
    "if",
    "for",
    "while",
    "switch",
    "catch",
    "function",
    "return",
    "with",
    "constructor",
    "super",
];

/// Brace-delimited languages: tracks nesting to find enclosing types.
fn scan_braced(text: &str, language: &str) -> Vec<Found> {
    static STRINGS: LazyLock<Regex> =
        LazyLock::new(|| regex(r#""(?:\\.|[^"\\])*"|'(?:\\.|[^'\\])'"#));
    static CONTAINER: LazyLock<Regex> = LazyLock::new(|| {
        regex(r"\b(?:class|struct|interface|enum|record|namespace|trait)\s+([A-Za-z_]\w*)")
    });
    static RUST_IMPL: LazyLock<Regex> = LazyLock::new(|| {
        regex(
            r"^\s*(?:unsafe\s+)?impl\b(?:\s*<[^{]*?>)?\s+(?:[\w:<>, &']+?\s+for\s+)?(?:[\w]+::)*([A-Za-z_]\w*)",
        )
    });
    static RUST_FN: LazyLock<Regex> = LazyLock::new(|| regex(r"\bfn\s+([A-Za-z_]\w*)\s*[<(]"));
    static JS_FUNCTION: LazyLock<Regex> =
        LazyLock::new(|| regex(r"\bfunction\s*\*?\s*([A-Za-z_$][\w$]*)\s*\("));
    static JS_BINDING: LazyLock<Regex> = LazyLock::new(|| {
        regex(
            r"\b(?:const|let|var)\s+([A-Za-z_$][\w$]*)\s*=\s*(?:async\s+)?(?:function\b|\([^)]*\)\s*=>|[A-Za-z_$][\w$]*\s*=>)",
        )
    });
    static JS_METHOD: LazyLock<Regex> = LazyLock::new(|| {
        regex(r"^\s*(?:(?:static|async|get|set)\s+|\*\s*)*([A-Za-z_$][\w$]*)\s*\([^)]*\)\s*\{")
    });
    static TYPED: LazyLock<Regex> = LazyLock::new(|| {
        regex(
            r"^\s*((?:[A-Za-z_][\w:.]*(?:\s*<[^;{}()]*>)?(?:\[\])*[\s\*&]+)+)((?:[A-Za-z_]\w*::)*~?[A-Za-z_]\w*)\s*\(",
        )
    });

    let mut found = Vec::new();
    let mut depth: usize = 0;
    let mut containers: Vec<(String, usize)> = Vec::new();
    let mut pending: Option<String> = None;
    let mut in_block_comment = false;

    for (index, raw) in text.lines().enumerate() {
        let mut line = raw.to_string();
        if in_block_comment {
            match line.find("*/") {
                Some(end) => {
                    line = line[end + 2..].to_string();
                    in_block_comment = false;
                }
                None => continue,
            }
        }
        while let Some(start) = line.find("/*") {
            match line[start..].find("*/") {
                Some(end) => line.replace_range(start..start + end + 2, " "),
                None => {
                    line.truncate(start);
                    in_block_comment = true;
                }
            }
        }
        let mut code = STRINGS.replace_all(&line, "\"\"").into_owned();
        if let Some(cut) = code.find("//") {
            code.truncate(cut);
        }
        if code.trim_start().starts_with('#') {
            continue;
        }

        let enclosing = containers.last().map(|(n, _)| n.clone());
        let hit: Option<(String, Option<String>)> = match language {
            "rust" => RUST_FN
                .captures(&code)
                .map(|c| (c[1].to_string(), enclosing.clone())),
            "javascript" => JS_FUNCTION
                .captures(&code)
                .or_else(|| JS_BINDING.captures(&code))
                .map(|c| (c[1].to_string(), None))
                .or_else(|| {
                    let c = JS_METHOD.captures(&code)?;
                    let name = &c[1];
                    (enclosing.is_some() && !JS_KEYWORDS.contains(&name))
                        .then(|| (name.to_string(), enclosing.clone()))
                }),
            _ => typed_signature(&TYPED, &code, language, enclosing.as_deref()),
        };
        if let Some((name, container)) = hit {
            found.push((index + 1, name, container));
        }

        let declared = if language == "rust" {
            RUST_IMPL
                .captures(&code)
                .or_else(|| CONTAINER.captures(&code))
                .map(|c| c[1].to_string())
        } else {
            CONTAINER.captures(&code).map(|c| c[1].to_string())
        };
        if declared.is_some() {
            pending = declared;
        }
        for ch in code.chars() {
            match ch {
                '{' => {
                    depth += 1;
                    if let Some(name) = pending.take() {
                        containers.push((name, depth));
                    }
                }
                '}' => {
                    if containers.last().is_some_and(|(_, d)| *d == depth) {
                        containers.pop();
                    }
                    depth = depth.saturating_sub(1);
                }
                ';' => {
                    // Forward declarations such as `class Foo;`.
                    pending = None;
                }
                _ => {}
            }
        }
    }
    found
}

fn typed_signature(
    typed: &Regex,
    code: &str,
    language: &str,
    enclosing: Option<&str>,
) -> Option<(String, Option<String>)> {
    let c = typed.captures(code)?;
    let prefix_words: Vec<&str> = c[1]
        .split(|ch: char| ch.is_whitespace() || ch == '*' || ch == '&')
        .filter(|w| !w.is_empty())
        .collect();
    let first = *prefix_words.first()?;
    if NOT_A_TYPE.contains(&first) {
        return None;
    }
    // At least one word must be a return type rather than a modifier.
    if prefix_words.iter().all(|w| MODIFIERS.contains(w)) {
        return None;
    }
    let is_c_family = matches!(language, "c" | "cpp");
    if is_c_family && code.trim_end().ends_with(';') {
        return None;
    }
    let qualified = &c[2];
    let (owner, name) = match qualified.rsplit_once("::") {
        Some((owner, name)) => (Some(owner.rsplit("::").next().unwrap_or(owner)), name),
        None => (None, qualified),
    };
    let container = owner.or(enclosing);
    if name.starts_with('~') || name.starts_with("operator") {
        return None;
    }
    if container.is_some_and(|c| c == name) {
        return None;
    }
    Some((name.to_string(), container.map(str::to_string)))
}

/// Name/path patterns marking test methods. `re:` selects a regular
/// expression; anything else is a glob (`*` does not cross `/`).
#[derive(Debug, Clone, Default)]
pub struct TestMatcher {
    globs: Vec<GlobMatcher>,
    regexes: Vec<Regex>,
}

impl TestMatcher {
    pub fn new<S: AsRef<str>>(patterns: &[S]) -> Result<TestMatcher> {
        let mut matcher = TestMatcher::default();
        for pattern in patterns {
            let pattern = pattern.as_ref();
            let invalid = |message: String| Error::Pattern {
                pattern: pattern.to_string(),
                message,
            };
            if let Some(re) = pattern.strip_prefix("re:") {
                matcher
                    .regexes
                    .push(Regex::new(re).map_err(|e| invalid(e.to_string()))?);
            } else {
                let glob = GlobBuilder::new(pattern)
                    .literal_separator(true)
                    .build()
                    .map_err(|e| invalid(e.to_string()))?;
                matcher.globs.push(glob.compile_matcher());
            }
        }
        Ok(matcher)
    }

    pub fn is_match(&self, text: &str) -> bool {
        self.globs.iter().any(|g| g.is_match(text)) || self.regexes.iter().any(|r| r.is_match(text))
    }
}

/// Marks the record as a test when its name or path matches.
pub fn classify_test_method(record: IdentifierRecord, matcher: &TestMatcher) -> IdentifierRecord {
    if matcher.is_match(&record.name) || matcher.is_match(&record.path) {
        record.with_kind(Kind::Test)
    } else {
        record
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(text: &str, language: &str) -> Vec<(String, Option<String>)> {
        scan_text(text, language, "x")
            .unwrap()
            .into_iter()
            .map(|r| (r.name, r.container))
            .collect()
    }

    #[test]
    fn reads_minimal_record() {
        let recs = parse_identifier_lines(
            r#"{"name":"getFullName","path":"a.java","line":3}"#,
            Path::new("ids.jsonl"),
        )
        .unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].name, "getFullName");
        assert_eq!(recs[0].kind, Kind::Method);
        assert_eq!(recs[0].path, "a.java");
        assert_eq!(recs[0].line, 3);
    }

    #[test]
    fn empty_input() {
        assert!(parse_identifier_lines("", Path::new("e.jsonl"))
            .unwrap()
            .is_empty());
        assert!(parse_identifier_lines("\n  \n", Path::new("e.jsonl"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn missing_name_is_rejected_with_line() {
        let err = parse_identifier_lines(r#"{"path":"a.java","line":3}"#, Path::new("ids.jsonl"))
            .unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 1, .. }), "{err}");
        let err = parse_identifier_lines("{\"name\":\"ok\"}\nnot json", Path::new("ids.jsonl"))
            .unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");
        let err =
            parse_identifier_lines(r#"{"name":"bad name"}"#, Path::new("ids.jsonl")).unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 1, .. }), "{err}");
    }

    #[test]
    fn defaults_point_at_list_file() {
        let recs = parse_identifier_lines(
            "\n{\"name\":\"run\",\"kind\":\"test\"}",
            Path::new("ids.jsonl"),
        )
        .unwrap();
        assert_eq!(recs[0].path, "ids.jsonl");
        assert_eq!(recs[0].line, 2);
        assert_eq!(recs[0].kind, Kind::Test);
        assert_eq!(recs[0].language, "unknown");
    }

    #[test]
    fn name_validation() {
        assert!(validate_name("get_URL").is_ok());
        assert!(validate_name("kebab-name").is_ok());
        assert!(validate_name("").is_err());
        assert!(validate_name("__").is_err());
        assert!(validate_name("$x").is_err());
        assert!(validate_name("naïve").is_err());
    }

    #[test]
    fn python_def() {
        let src = "class Tree:\n    def get_cached_node(self):\n        pass\n    def __init__(self):\n        pass\n\ndef helper():\n    pass\n";
        assert_eq!(
            names(src, "python"),
            [
                ("get_cached_node".to_string(), Some("Tree".to_string())),
                ("helper".to_string(), None)
            ]
        );
    }

    #[test]
    fn c_function() {
        let recs = scan_text(
            "void gimpItemGetPath() {\n  return;\n}\nint proto(int x);\n",
            "c",
            "g.c",
        )
        .unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].name, "gimpItemGetPath");
        assert_eq!(recs[0].language, "c");
        assert_eq!(recs[0].line, 1);
        assert_eq!(recs[0].kind, Kind::Function);
    }

    #[test]
    fn no_definitions() {
        assert!(names("int x = 3;\nreturn foo(x);\n", "c").is_empty());
        assert!(names("x = 1\nprint(x)\n", "python").is_empty());
    }

    #[test]
    fn java_methods_skip_constructors() {
        let src = "public class Person {\n  public Person(String n) {}\n  public String getFullName() {\n    return foo(bar);\n  }\n  interface X {\n    void run();\n  }\n}\n";
        assert_eq!(
            names(src, "java"),
            [
                ("getFullName".to_string(), Some("Person".to_string())),
                ("run".to_string(), Some("X".to_string()))
            ]
        );
    }

    #[test]
    fn cpp_qualified_and_special_members() {
        let src = "Foo::Foo() {}\nFoo::~Foo() {}\nbool Foo::operator==(const Foo& o) const {}\nstd::string Foo::getName() const {\n}\n";
        assert_eq!(
            names(src, "cpp"),
            [("getName".to_string(), Some("Foo".to_string()))]
        );
    }

    #[test]
    fn rust_impl_blocks() {
        let src = "struct Tree;\nimpl Display for Tree {\n    fn fmt(&self) {}\n}\nfn main() {\n    let s = \"fn fake()\";\n}\n";
        assert_eq!(
            names(src, "rust"),
            [
                ("fmt".to_string(), Some("Tree".to_string())),
                ("main".to_string(), None)
            ]
        );
    }

    #[test]
    fn go_receivers() {
        let src = "func (t *Tree) Insert(v int) {\n}\nfunc main() {\n}\n";
        assert_eq!(
            names(src, "go"),
            [
                ("Insert".to_string(), Some("Tree".to_string())),
                ("main".to_string(), None)
            ]
        );
    }

    #[test]
    fn javascript_forms() {
        let src = "function loadUser(id) {}\nconst saveUser = (u) => {};\nclass Store {\n  constructor() {}\n  getItem(key) {\n    if (key) {}\n  }\n}\n";
        assert_eq!(
            names(src, "javascript"),
            [
                ("loadUser".to_string(), None),
                ("saveUser".to_string(), None),
                ("getItem".to_string(), Some("Store".to_string()))
            ]
        );
    }

    #[test]
    fn block_comments_hide_code() {
        assert!(names("/* void hidden() {\n} */\n", "c").is_empty());
    }

    #[test]
    fn unsupported_language() {
        assert!(matches!(
            scan_text("", "cobol", "x"),
            Err(Error::UnsupportedLanguage(_))
        ));
    }

    #[test]
    fn extension_table() {
        assert_eq!(language_for_path(Path::new("a/b.py")), Some("python"));
        assert_eq!(language_for_path(Path::new("x.HPP")), Some("cpp"));
        assert_eq!(language_for_path(Path::new("README.md")), None);
    }

    #[test]
    fn test_patterns() {
        let m = TestMatcher::new(&["test*"]).unwrap();
        let rec = IdentifierRecord::new("testLoginFailsWhenPasswordEmpty", "a.java", 1).unwrap();
        assert_eq!(classify_test_method(rec, &m).kind, Kind::Test);
        let rec = IdentifierRecord::new("getFullName", "a.java", 1).unwrap();
        assert_eq!(classify_test_method(rec, &m).kind, Kind::Method);

        let m = TestMatcher::new(&["tests/**"]).unwrap();
        let rec = IdentifierRecord::new("returns_false_if_no_setter_found", "tests/setter.rs", 9)
            .unwrap();
        let once = classify_test_method(rec, &m);
        assert_eq!(once.kind, Kind::Test);
        assert_eq!(classify_test_method(once.clone(), &m), once);

        let m = TestMatcher::new(&["re:^should_"]).unwrap();
        let rec = IdentifierRecord::new("should_reject_empty", "x.py", 1).unwrap();
        assert_eq!(classify_test_method(rec, &m).kind, Kind::Test);
    }

    #[test]
    fn invalid_patterns() {
        assert!(matches!(
            TestMatcher::new(&["re:("]),
            Err(Error::Pattern { .. })
        ));
        assert!(matches!(
            TestMatcher::new(&["a[b"]),
            Err(Error::Pattern { .. })
        ));
    }
}
