//! Method-name quality linter.
//!
//! Names are split into words, tagged with parts of speech and checked
//! against ten naming standards (plus an optional Hungarian-notation rule).
//! Each rule carries a weight equal to the share of surveyed developers who
//! agreed with it; a name's score is the weight share of the rules it meets.
//!
//! ```
//! use namelint::{evaluate, IdentifierRecord, Lexicon, RuleConfig, RuleId};
//!
//! let record = IdentifierRecord::new("get_QWE", "a.java", 1).unwrap();
//! let report = evaluate(&record, Lexicon::builtin(), &RuleConfig::default(), None);
//! assert!(report.fails(RuleId::Acronym));
//! ```

pub mod batch;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod grammar;
pub mod ingest;
pub mod lexicon;
pub mod report;
pub mod rules;
pub mod tokenizer;

pub use corpus::{aggregate, merge, prefix_frequency, restyle_pass, CorpusReport};
pub use error::{Error, Result};
pub use grammar::{classify_pattern, tag, GrammarPattern, PosTag, TaggedName};
pub use ingest::{
    classify_test_method, read_identifier_file, scan_source, IdentifierRecord, Kind, TestMatcher,
};
pub use lexicon::{classify_token, Lexicon, LexiconConfig, TokenClass};
pub use report::{exit_code, render_machine, render_text, FailOn, Format, RenderOptions};
pub use rules::{evaluate, NameReport, RuleConfig, RuleFinding, RuleId, Severity};
pub use tokenizer::{split, NamingStyle, Token, TokenKind, TokenizedName};
