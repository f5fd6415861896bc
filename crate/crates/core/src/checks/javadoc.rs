use std::collections::HashSet;

use crate::category::{Category, Violation};
use crate::model::{JavadocFact, MemberFact, MemberKind, SourceFileModel, Visibility};

/// Minimum prose words for class, method and constructor Javadoc.
pub const MIN_JAVADOC_WORDS: usize = 10;

/// Formatting sub-checks that can fire for one comment.
pub const MAX_FORMATTING_VIOLATIONS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JavadocTarget {
    Class,
    Method,
    Constructor,
    Field,
}

impl JavadocTarget {
    pub const ALL: [JavadocTarget; 4] = [
        JavadocTarget::Class,
        JavadocTarget::Method,
        JavadocTarget::Constructor,
        JavadocTarget::Field,
    ];

    pub fn category(self) -> Category {
        match self {
            JavadocTarget::Class => Category::JavadocClass,
            JavadocTarget::Method => Category::JavadocMethod,
            JavadocTarget::Constructor => Category::JavadocConstructor,
            JavadocTarget::Field => Category::JavadocField,
        }
    }

    fn min_words(self) -> usize {
        match self {
            JavadocTarget::Field => 0,
            _ => MIN_JAVADOC_WORDS,
        }
    }

    fn noun(self) -> &'static str {
        match self {
            JavadocTarget::Class => "class",
            JavadocTarget::Method => "method",
            JavadocTarget::Constructor => "constructor",
            JavadocTarget::Field => "field",
        }
    }
}

/// Public declarations of the given kind: `(line, name, javadoc)`.
pub fn public_declarations(
    model: &SourceFileModel,
    target: JavadocTarget,
) -> Vec<(usize, &str, Option<&JavadocFact>)> {
    let public = |v: Visibility| v == Visibility::Public;
    match target {
        JavadocTarget::Class => model
            .types
            .iter()
            .filter(|t| t.is_class_like() && public(t.visibility))
            .map(|t| (t.line, t.name.as_str(), t.javadoc.as_ref()))
            .collect(),
        _ => model
            .members()
            .map(|(_, m)| m)
            .filter(|m| public(m.visibility))
            .filter(|m| match target {
                JavadocTarget::Method => m.kind.is_method(),
                JavadocTarget::Constructor => m.kind == MemberKind::Constructor,
                _ => m.kind.is_field(),
            })
            .map(|m| (m.line, m.name.as_str(), m.javadoc.as_ref()))
            .collect(),
    }
}

pub fn check_javadoc_presence(model: &SourceFileModel, target: JavadocTarget) -> Vec<Violation> {
    let mut out = Vec::new();
    for (line, name, doc) in public_declarations(model, target) {
        let message = match doc {
            None => format!("public {} has no Javadoc", target.noun()),
            Some(d) if d.word_count < target.min_words() => format!(
                "{} Javadoc has {} words, fewer than {}",
                target.noun(),
                d.word_count,
                target.min_words()
            ),
            Some(_) => continue,
        };
        out.push(Violation::new(target.category(), &model.path, line, message).with_detail(name));
    }
    out
}

const DESCRIBED_TAGS: &[&str] = &["param", "return", "throws", "exception", "deprecated"];

/// Formatting findings for one method comment, at most one per sub-check.
pub fn formatting_findings(method: &MemberFact, doc: &JavadocFact) -> Vec<&'static str> {
    let mut found = Vec::new();

    let params: Vec<&str> = method.params.iter().map(|p| p.name.as_str()).collect();
    let type_params: Vec<String> = method
        .type_params
        .iter()
        .map(|t| format!("<{t}>"))
        .collect();
    let param_tags: Vec<Option<&str>> = doc
        .tags_named(&["param"])
        .map(|t| t.arg.as_deref())
        .collect();

    let documented: HashSet<&str> = param_tags.iter().flatten().copied().collect();
    if params.iter().any(|p| !documented.contains(p)) {
        found.push("parameter without @param");
    }

    let mut seen = HashSet::new();
    let bad_param_tag = param_tags.iter().any(|arg| match arg {
        None => true,
        Some(a) => {
            let known = params.contains(a) || type_params.iter().any(|t| t == a);
            !known || !seen.insert(*a)
        }
    });
    if bad_param_tag {
        found.push("@param for unknown or repeated parameter");
    }

    let returns = doc.tags_named(&["return"]).count();
    let has_value = method.return_type_name.is_some() && !method.is_void();
    if (has_value && returns == 0) || (method.is_void() && returns > 0) {
        found.push(if has_value {
            "missing @return"
        } else {
            "@return on void method"
        });
    }

    if returns > 1 {
        found.push("duplicate @return");
    }

    let thrown_docs: HashSet<&str> = doc
        .tags_named(&["throws", "exception"])
        .filter_map(|t| t.arg.as_deref())
        .map(|a| a.rsplit('.').next().unwrap_or(a))
        .collect();
    if method
        .thrown_types
        .iter()
        .any(|t| !thrown_docs.contains(t.as_str()))
    {
        found.push("thrown type without @throws");
    }

    if doc
        .tags_named(DESCRIBED_TAGS)
        .any(|t| t.description_word_count == 0)
    {
        found.push("tag with empty description");
    }

    debug_assert!(found.len() <= MAX_FORMATTING_VIOLATIONS);
    found
}

/// Methods carrying a Javadoc comment, the constructs formatting is
/// checked on.
pub fn documented_methods(
    model: &SourceFileModel,
) -> impl Iterator<Item = (&MemberFact, &JavadocFact)> {
    model
        .members()
        .filter(|(_, m)| m.kind.is_method())
        .filter_map(|(_, m)| m.javadoc.as_ref().map(|d| (m, d)))
}

pub fn check_javadoc_formatting(model: &SourceFileModel) -> Vec<Violation> {
    let mut out = Vec::new();
    for (m, doc) in documented_methods(model) {
        for message in formatting_findings(m, doc) {
            out.push(
                Violation::new(Category::JavadocFormatting, &model.path, doc.line, message)
                    .with_detail(&m.name),
            );
        }
    }
    out
}
