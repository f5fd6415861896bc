use std::sync::LazyLock;

use regex::Regex;

use crate::category::{Category, Violation};
use crate::model::{LocalKind, MemberFact, SourceFileModel, Visibility};
use crate::parse::parses_as_code;

/// Private members the serialization machinery calls reflectively.
const SERIALIZATION_HOOKS: &[&str] = &[
    "readObject",
    "writeObject",
    "readResolve",
    "writeReplace",
    "readObjectNoData",
    "serialVersionUID",
    "serialPersistentFields",
];

static CONTROL_HEAD: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^(\}\s*)?(else\s+)?(if|for|while|switch|catch|synchronized)\s*\(.*[)};{]$")
        .unwrap()
});
static BLOCK_HEAD: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^(\}\s*)?(else|try|finally|do)\s*\{$").unwrap());
static INLINE_TAG_END: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"\{@[^{}]*\}$").unwrap());

/// Whether one comment line, with comment markers already stripped, reads
/// as Java code rather than prose.
pub fn is_commented_out_code(line: &str) -> bool {
    let t = line.trim();
    if t.is_empty() {
        return false;
    }
    if matches!(t, "{" | "}" | "};" | "})" | "});") {
        return true;
    }
    if CONTROL_HEAD.is_match(t) || BLOCK_HEAD.is_match(t) {
        return true;
    }
    if t.ends_with(';') {
        return parses_as_code(t);
    }
    if t.ends_with('{') {
        return parses_as_code(&format!("{t}\n}}"));
    }
    if t.ends_with('}') && !INLINE_TAG_END.is_match(t) {
        return parses_as_code(t);
    }
    false
}

/// Lines of a comment with `//`, `/*`, `*/` and leading `*` removed,
/// paired with their line numbers.
fn comment_lines(text: &str, start_line: usize) -> Vec<(usize, String)> {
    let block = text.starts_with("/*");
    let mut body = text;
    if block {
        body = body.trim_start_matches("/*").trim_end_matches("*/");
    }
    body.lines()
        .enumerate()
        .map(|(i, l)| {
            let l = l.trim();
            let l = if block {
                l.trim_start_matches('*')
            } else {
                l.trim_start_matches('/')
            };
            (start_line + i, l.trim().to_string())
        })
        .collect()
}

fn exempt_private(m: &MemberFact) -> bool {
    !m.annotations.is_empty() || SERIALIZATION_HOOKS.contains(&m.name.as_str())
}

pub fn check_useless(model: &SourceFileModel) -> Vec<Violation> {
    let mut out = Vec::new();
    let path = &model.path;

    for imp in model.imports.iter().filter(|i| !i.used) {
        out.push(
            Violation::new(Category::Useless, path, imp.line, "unused import")
                .with_detail(&imp.imported_name),
        );
    }

    for (_, m) in model.members() {
        if m.visibility != Visibility::Private || m.used || exempt_private(m) {
            continue;
        }
        let what = if m.kind.is_method() {
            "unused private method"
        } else if m.kind.is_field() {
            "unused private field"
        } else {
            continue;
        };
        out.push(Violation::new(Category::Useless, path, m.line, what).with_detail(&m.name));
    }

    for (_, _, body) in model.bodies() {
        for v in &body.local_vars {
            if v.kind == LocalKind::Local && !v.used && v.name != "_" {
                out.push(
                    Violation::new(Category::Useless, path, v.line, "unused local variable")
                        .with_detail(&v.name),
                );
            }
        }
    }

    for c in model.comments.iter().filter(|c| !c.is_javadoc) {
        for (line, text) in comment_lines(&c.text, c.start_line) {
            if is_commented_out_code(&text) {
                out.push(
                    Violation::new(Category::Useless, path, line, "commented-out code")
                        .with_detail(text),
                );
            }
        }
    }
    out
}
