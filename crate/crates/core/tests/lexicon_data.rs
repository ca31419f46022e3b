use namelint::lexicon::{Lexicon, TokenClass};
use namelint::Token;
use sha2::{Digest, Sha256};

const DICTIONARY: &str = include_str!("../data/dictionary.txt");
const POS: &str = include_str!("../data/pos.txt");

fn sha256(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[test]
fn bundled_word_lists_are_pinned() {
    // Regenerate with scripts/build_lexicon.py and update both digests together.
    assert_eq!(
        sha256(DICTIONARY),
        "d614eddd011fd1de6eafa2f577b6d927f56bd1184f4f719ad34ceac18ca462f7"
    );
    assert_eq!(
        sha256(POS),
        "4556b47d216952b3630efd2890a8baa903c9e237209ccaaf3e2488a4ead2fb1c"
    );
}

#[test]
fn dictionary_is_large_lowercase_and_digit_free() {
    let words: Vec<&str> = DICTIONARY.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(words.len() >= 50_000, "{}", words.len());
    for w in &words {
        assert!(w.bytes().all(|b| b.is_ascii_lowercase()), "{w}");
    }
    assert_eq!(Lexicon::builtin().dictionary_len(), words.len());
}

#[test]
fn every_dictionary_word_classifies_as_dictionary_or_slang() {
    let lex = Lexicon::builtin();
    for w in DICTIONARY.lines().filter(|l| !l.starts_with('#')) {
        let class = lex.classify(&Token::new(w));
        assert!(
            matches!(
                class,
                TokenClass::Dictionary | TokenClass::Slang | TokenClass::SingleLetter
            ),
            "{w}: {class:?}"
        );
        if lex.is_slang(w) {
            assert_eq!(class, TokenClass::Slang, "{w}");
        }
    }
}

#[test]
fn required_default_entries() {
    let lex = Lexicon::builtin();
    let exp = |a: &str| {
        lex.expansions(a)
            .map(|s| s.iter().cloned().collect::<Vec<_>>())
    };
    assert_eq!(exp("str").unwrap(), ["string"]);
    assert_eq!(exp("py").unwrap(), ["python"]);
    assert_eq!(exp("algo").unwrap(), ["algorithm"]);
    assert_eq!(exp("db").unwrap(), ["database"]);
    assert_eq!(exp("proto").unwrap(), ["protocol", "prototype"]);
    assert_eq!(exp("repr").unwrap(), ["repair", "representation"]);
    for a in ["URL", "SQL", "GUI", "FIFO", "DOM"] {
        assert!(lex.is_acronym(a), "{a}");
    }
    assert!(lex.is_slang("fido"));
    assert!(lex.is_slang("curveball"));
    assert!(lex.idioms().any(|i| i == ["cutting", "corners"]));
    assert!(lex.contains_word("string"));
}
