use crate::category::{Category, Violation};
use crate::discover::source_root_index;
use crate::lexicon::{matches_casing, split_identifier, Casing, Lexicon, WordCategory};
use crate::model::{MemberKind, SourceFileModel};

/// First words accepted on method names even when the lexicon says
/// otherwise (accessors, factories, conversions).
pub const METHOD_PREFIX_ALLOWLIST: &[&str] = &[
    "get", "set", "is", "has", "can", "to", "of", "from", "new", "with",
];

/// Serialization fields whose names are fixed by the JDK.
const FIXED_FIELD_NAMES: &[&str] = &["serialVersionUID", "serialPersistentFields"];

pub fn check_class_names(model: &SourceFileModel, lexicon: &Lexicon) -> Vec<Violation> {
    let mut out = Vec::new();
    for ty in model.types.iter().filter(|t| t.is_class_like()) {
        if !matches_casing(&ty.name, Casing::UpperCamel) {
            out.push(
                Violation::new(
                    Category::ClassNames,
                    &model.path,
                    ty.line,
                    "type name is not UpperCamelCase",
                )
                .with_detail(&ty.name),
            );
            continue;
        }
        let words = split_identifier(&ty.name).words;
        let last = words.last().expect("split is total");
        let cats = lexicon.classify_inflected(last);
        if !cats.is_empty() && !cats.contains(WordCategory::Noun) {
            out.push(
                Violation::new(
                    Category::ClassNames,
                    &model.path,
                    ty.line,
                    format!("type name does not end in a noun (`{last}`)"),
                )
                .with_detail(&ty.name),
            );
        }
    }
    out
}

pub fn check_method_names(model: &SourceFileModel, lexicon: &Lexicon) -> Vec<Violation> {
    let mut out = Vec::new();
    for (_, m) in model.members().filter(|(_, m)| m.kind.is_method()) {
        if !matches_casing(&m.name, Casing::LowerCamel) {
            out.push(
                Violation::new(
                    Category::MethodNames,
                    &model.path,
                    m.line,
                    "method name is not lowerCamelCase",
                )
                .with_detail(&m.name),
            );
            continue;
        }
        if m.name == "main" {
            continue;
        }
        let words = split_identifier(&m.name).words;
        let first = &words[0];
        if METHOD_PREFIX_ALLOWLIST.contains(&first.as_str()) {
            continue;
        }
        let cats = lexicon.classify_inflected(first);
        if !cats.is_empty() && !cats.contains(WordCategory::Verb) {
            out.push(
                Violation::new(
                    Category::MethodNames,
                    &model.path,
                    m.line,
                    format!("method name does not start with a verb (`{first}`)"),
                )
                .with_detail(&m.name),
            );
        }
    }
    out
}

/// A declared variable and the casing it must follow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSite<'a> {
    pub name: &'a str,
    pub line: usize,
    pub casing: Casing,
}

/// Fields, parameters, record components and locals of a file, in source
/// order per type. Names exempt from any convention are omitted.
pub fn variable_sites(model: &SourceFileModel) -> Vec<VariableSite<'_>> {
    let mut out = Vec::new();
    for ty in &model.types {
        for c in &ty.components {
            out.push(VariableSite {
                name: &c.name,
                line: c.line,
                casing: Casing::LowerCamel,
            });
        }
        for m in &ty.members {
            if m.kind.is_field() {
                if FIXED_FIELD_NAMES.contains(&m.name.as_str()) {
                    continue;
                }
                let casing = if m.is_static_final {
                    Casing::Constant
                } else {
                    Casing::LowerCamel
                };
                out.push(VariableSite {
                    name: &m.name,
                    line: m.line,
                    casing,
                });
            }
            if matches!(
                m.kind,
                MemberKind::Constructor | MemberKind::InstanceMethod | MemberKind::StaticMethod
            ) {
                for p in &m.params {
                    out.push(VariableSite {
                        name: &p.name,
                        line: p.line,
                        casing: Casing::LowerCamel,
                    });
                }
            }
        }
        let bodies = ty
            .members
            .iter()
            .filter_map(|m| m.body.as_ref())
            .chain(ty.initializers.iter());
        for body in bodies {
            for v in &body.local_vars {
                if v.name == "_" {
                    continue;
                }
                out.push(VariableSite {
                    name: &v.name,
                    line: v.line,
                    casing: Casing::LowerCamel,
                });
            }
        }
    }
    out
}

pub fn check_variable_names(model: &SourceFileModel) -> Vec<Violation> {
    variable_sites(model)
        .into_iter()
        .filter(|v| !matches_casing(v.name, v.casing))
        .map(|v| {
            let message = match v.casing {
                Casing::Constant => "static final field is not CONSTANT_CASE",
                _ => "variable name is not lowerCamelCase",
            };
            Violation::new(Category::VariableNames, &model.path, v.line, message)
                .with_detail(v.name)
        })
        .collect()
}

/// Directories between the source root and the file, when the source root
/// is known. In fallback discovery the root is unknown and `None` is
/// returned.
fn package_dirs(path: &str) -> Option<Vec<&str>> {
    let parts: Vec<&str> = path.split('/').collect();
    let start = source_root_index(&parts)?;
    Some(parts[start..parts.len() - 1].to_vec())
}

/// Whether the package check applies to this file: it declares a package,
/// or it sits below a known source root in a subdirectory.
pub fn has_package_context(model: &SourceFileModel) -> bool {
    model.package.is_some() || package_dirs(&model.path).is_some_and(|d| !d.is_empty())
}

fn valid_package_segment(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

pub fn check_package_names(model: &SourceFileModel) -> Vec<Violation> {
    let dirs = package_dirs(&model.path);
    let Some(pkg) = &model.package else {
        return match dirs {
            Some(d) if !d.is_empty() => vec![Violation::new(
                Category::PackageNames,
                &model.path,
                1,
                format!("missing package declaration, expected `{}`", d.join(".")),
            )],
            _ => Vec::new(),
        };
    };
    let segments: Vec<&str> = pkg.name.split('.').collect();
    if let Some(bad) = segments.iter().find(|s| !valid_package_segment(s)) {
        return vec![Violation::new(
            Category::PackageNames,
            &model.path,
            pkg.line,
            format!("package segment `{bad}` is not all lowercase letters and digits"),
        )
        .with_detail(&pkg.name)];
    }
    let matches = match &dirs {
        Some(d) => *d == segments,
        None => {
            // unknown source root: the package must be a suffix of the directory
            let all: Vec<&str> = model.path.split('/').collect();
            let file_dirs = &all[..all.len() - 1];
            file_dirs.ends_with(&segments)
        }
    };
    if matches {
        Vec::new()
    } else {
        let actual = match dirs {
            Some(d) => d.join("/"),
            None => model
                .path
                .rsplit_once('/')
                .map(|(d, _)| d.to_string())
                .unwrap_or_default(),
        };
        vec![Violation::new(
            Category::PackageNames,
            &model.path,
            pkg.line,
            format!("package `{}` does not match directory `{actual}`", pkg.name),
        )
        .with_detail(&pkg.name)]
    }
}
