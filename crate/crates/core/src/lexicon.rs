//! Identifier splitting, casing conventions and the part-of-speech lexicon.

use std::collections::HashMap;
use std::path::Path;
use std::sync::LazyLock;

use regex::Regex;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordCategory {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Other,
}

impl WordCategory {
    pub const ALL: [WordCategory; 5] = [
        WordCategory::Noun,
        WordCategory::Verb,
        WordCategory::Adjective,
        WordCategory::Adverb,
        WordCategory::Other,
    ];

    pub fn letter(self) -> char {
        match self {
            WordCategory::Noun => 'n',
            WordCategory::Verb => 'v',
            WordCategory::Adjective => 'a',
            WordCategory::Adverb => 'r',
            WordCategory::Other => 'o',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        WordCategory::ALL.into_iter().find(|w| w.letter() == c)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// Small set of [`WordCategory`] values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Categories(u8);

impl Categories {
    pub const EMPTY: Categories = Categories(0);

    pub fn contains(self, c: WordCategory) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn insert(&mut self, c: WordCategory) {
        self.0 |= c.bit();
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = WordCategory> {
        WordCategory::ALL
            .into_iter()
            .filter(move |c| self.contains(*c))
    }
}

impl FromIterator<WordCategory> for Categories {
    fn from_iter<I: IntoIterator<Item = WordCategory>>(iter: I) -> Self {
        let mut set = Categories::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

static BUNDLED_TEXT: &str = include_str!("../data/lexicon.tsv");
static BUNDLED: LazyLock<Lexicon> =
    LazyLock::new(|| Lexicon::parse(BUNDLED_TEXT).expect("bundled lexicon is well formed"));

/// Lowercase word to part-of-speech categories.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<String, Categories>,
}

impl Lexicon {
    /// The lexicon shipped with the crate.
    pub fn bundled() -> &'static Lexicon {
        &BUNDLED
    }

    /// Parses `word<TAB>n,v,a,r,o` lines. Blank lines and lines starting
    /// with `#` are ignored. All malformed lines are reported together.
    pub fn parse(text: &str) -> Result<Lexicon> {
        let mut entries = HashMap::new();
        let mut bad = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            match parse_entry(trimmed) {
                Some((word, cats)) => {
                    let slot: &mut Categories = entries.entry(word).or_default();
                    slot.0 |= cats.0;
                }
                None => bad.push(i + 1),
            }
        }
        if bad.is_empty() {
            Ok(Lexicon { entries })
        } else {
            Err(Error::Lexicon { lines: bad })
        }
    }

    pub fn load(path: &Path) -> Result<Lexicon> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Lexicon::parse(&text)
    }

    pub fn from_entries<'a>(
        entries: impl IntoIterator<Item = (&'a str, &'a [WordCategory])>,
    ) -> Lexicon {
        Lexicon {
            entries: entries
                .into_iter()
                .map(|(w, cats)| (w.to_lowercase(), cats.iter().copied().collect()))
                .collect(),
        }
    }

    pub fn insert(&mut self, word: &str, cats: Categories) {
        let slot = self.entries.entry(word.to_lowercase()).or_default();
        slot.0 |= cats.0;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lookup with the inflection fallback used by the naming checks: when
    /// the word itself is unknown, common plural, `-ing` and `-ed` endings
    /// are stripped and the stem is tried instead.
    pub fn classify_inflected(&self, word: &str) -> Categories {
        let word = word.to_lowercase();
        let exact = classify_word(&word, self);
        if !exact.is_empty() {
            return exact;
        }
        for stem in stems(&word) {
            let cats = classify_word(&stem, self);
            if !cats.is_empty() {
                return cats;
            }
        }
        Categories::EMPTY
    }
}

fn parse_entry(line: &str) -> Option<(String, Categories)> {
    let (word, cats) = line.split_once('\t')?;
    let word = word.trim();
    if word.is_empty() || word.chars().any(char::is_whitespace) {
        return None;
    }
    let mut set = Categories::EMPTY;
    for part in cats.split(',') {
        let mut chars = part.trim().chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return None;
        };
        set.insert(WordCategory::from_letter(c)?);
    }
    Some((word.to_lowercase(), set))
}

fn stems(word: &str) -> Vec<String> {
    let mut out = Vec::new();
    let push_stem = |stem: &str, out: &mut Vec<String>| {
        if stem.len() >= 2 {
            out.push(stem.to_string());
            out.push(format!("{stem}e"));
            let b = stem.as_bytes();
            if b.len() >= 3 && b[b.len() - 1] == b[b.len() - 2] {
                out.push(stem[..stem.len() - 1].to_string());
            }
        }
    };
    if let Some(s) = word
        .strip_suffix("ies")
        .or_else(|| word.strip_suffix("ied"))
    {
        out.push(format!("{s}y"));
    }
    if let Some(s) = word.strip_suffix("ing") {
        push_stem(s, &mut out);
    }
    if let Some(s) = word.strip_suffix("ed") {
        push_stem(s, &mut out);
    }
    if let Some(s) = word.strip_suffix("es") {
        out.push(s.to_string());
    }
    if let Some(s) = word.strip_suffix('s') {
        if !s.ends_with('s') {
            out.push(s.to_string());
        }
    }
    out.retain(|s| s.len() >= 2);
    out
}

/// Exact lookup of a lowercase word; unknown words yield an empty set.
pub fn classify_word(word: &str, lexicon: &Lexicon) -> Categories {
    lexicon.entries.get(word).copied().unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentifierWords {
    pub raw: String,
    /// Lowercase tokens in order.
    pub words: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CharClass {
    Upper,
    Lower,
    Digit,
    Separator,
}

fn char_class(c: char) -> CharClass {
    if c == '_' || c == '$' {
        CharClass::Separator
    } else if c.is_ascii_digit() {
        CharClass::Digit
    } else if c.is_uppercase() {
        CharClass::Upper
    } else {
        CharClass::Lower
    }
}

/// Splits an identifier into lowercase words.
///
/// Boundaries fall between a lowercase and an uppercase letter, between
/// digits and letters, and at `_`/`$` (which are dropped). A run of
/// capitals followed by a lowercase letter keeps its last capital for the
/// next word: `HTTPServer` gives `http`, `server`.
pub fn split_identifier(name: &str) -> IdentifierWords {
    let chars: Vec<char> = name.chars().collect();
    let mut words = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        let class = char_class(c);
        if class == CharClass::Separator {
            if !current.is_empty() {
                words.push(std::mem::take(&mut current));
            }
            continue;
        }
        if let Some(prev) = current.chars().last().map(char_class) {
            let next = chars.get(i + 1).copied().map(char_class);
            let boundary = match (prev, class) {
                (CharClass::Lower, CharClass::Upper) => true,
                (CharClass::Digit, c) | (c, CharClass::Digit) if c != CharClass::Digit => true,
                (CharClass::Upper, CharClass::Upper) => next == Some(CharClass::Lower),
                _ => false,
            };
            if boundary {
                words.push(std::mem::take(&mut current));
            }
        }
        current.push(c);
    }
    if !current.is_empty() {
        words.push(current);
    }
    let mut words: Vec<String> = words.into_iter().map(|w| w.to_lowercase()).collect();
    if words.is_empty() {
        words.push(name.to_lowercase());
    }
    IdentifierWords {
        raw: name.to_string(),
        words,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Casing {
    UpperCamel,
    LowerCamel,
    Constant,
}

static UPPER_CAMEL: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"^[A-Z][A-Za-z0-9]*$").unwrap());
static LOWER_CAMEL: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"^[a-z][A-Za-z0-9]*$").unwrap());
static CONSTANT: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[A-Z][A-Z0-9]*(_[A-Z0-9]+)*$").unwrap());

pub fn matches_casing(name: &str, casing: Casing) -> bool {
    match casing {
        Casing::UpperCamel => UPPER_CAMEL.is_match(name),
        Casing::LowerCamel => LOWER_CAMEL.is_match(name),
        Casing::Constant => CONSTANT.is_match(name),
    }
}
