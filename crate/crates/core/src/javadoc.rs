//! Javadoc comment decomposition: prose word count and block tags.

use std::sync::LazyLock;

use regex::Regex;

use crate::model::{JavadocFact, JavadocTag};

/// Block tags whose first token is an argument name rather than prose.
const TAGS_WITH_ARG: &[&str] = &["param", "throws", "exception"];

static INLINE_TAG: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\{@[A-Za-z]+\s*([^}]*)\}").unwrap());
static HTML_TAG: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"</?[A-Za-z][A-Za-z0-9]*(\s[^<>]*)?/?>").unwrap());
static BLOCK_TAG: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^@([A-Za-z][A-Za-z0-9.-]*)(.*)$").unwrap());

/// Decomposes a `/** ... */` comment found at `line`.
///
/// Words are whitespace-separated tokens with at least one alphanumeric
/// character, counted after inline tags are replaced by their payload and
/// HTML markup is dropped. Tag keywords and `@param`/`@throws` argument
/// names are not words; tag descriptions are.
pub fn extract_javadoc(raw: &str, line: usize) -> JavadocFact {
    let body = raw.trim().trim_start_matches("/**").trim_end_matches("*/");

    let mut description = String::new();
    let mut tag_texts: Vec<(String, String)> = Vec::new();
    for text_line in body.lines() {
        let text_line = text_line.trim_start().trim_start_matches('*').trim();
        if let Some(caps) = BLOCK_TAG.captures(text_line) {
            tag_texts.push((caps[1].to_string(), caps[2].to_string()));
        } else if let Some((_, text)) = tag_texts.last_mut() {
            text.push('\n');
            text.push_str(text_line);
        } else {
            description.push('\n');
            description.push_str(text_line);
        }
    }

    let mut word_count = count_words(&description);
    let tags = tag_texts
        .into_iter()
        .map(|(name, text)| {
            let (arg, rest) = if TAGS_WITH_ARG.contains(&name.as_str()) {
                let text = text.trim_start();
                match text.split_once(char::is_whitespace) {
                    Some((arg, rest)) => (Some(arg.to_string()), rest.to_string()),
                    None if text.is_empty() => (None, String::new()),
                    None => (Some(text.to_string()), String::new()),
                }
            } else {
                (None, text)
            };
            let description_word_count = count_words(&rest);
            word_count += description_word_count;
            JavadocTag {
                name,
                arg,
                description_word_count,
            }
        })
        .collect();

    JavadocFact {
        line,
        word_count,
        tags,
    }
}

fn count_words(text: &str) -> usize {
    let text = INLINE_TAG.replace_all(text, " $1 ");
    let text = HTML_TAG.replace_all(&text, " ");
    text.split_whitespace()
        .filter(|w| w.chars().any(char::is_alphanumeric))
        .count()
}

pub fn is_javadoc(comment: &str) -> bool {
    comment.starts_with("/**") && comment != "/**/"
}
