//! What a repository's documentation says about its code style.

use std::fs;
use std::path::Path;
use std::sync::LazyLock;

use regex::{Regex, RegexSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Patterns naming the Google guide explicitly. Case-insensitive.
pub const GOOGLE_PATTERNS: &[&str] = &[
    r"google[\s_-]+java[\s_-]+style",
    r"google\.github\.io/styleguide/javaguide",
];

/// Patterns for a generic code-style statement. Case-insensitive.
pub const GENERAL_PATTERNS: &[&str] = &[
    r"code[\s_-]style",
    r"coding[\s_-]standards?",
    r"style[\s_-]guide",
];

static GOOGLE: LazyLock<Vec<Regex>> = LazyLock::new(|| compile(GOOGLE_PATTERNS));
static GENERAL: LazyLock<Vec<Regex>> = LazyLock::new(|| compile(GENERAL_PATTERNS));
static GOOGLE_WORD: LazyLock<Vec<Regex>> = LazyLock::new(|| compile(&["google"]));
static LINTER_CONFIG: LazyLock<RegexSet> = LazyLock::new(|| {
    RegexSet::new([
        r"(?i)checkstyle.*\.(xml|properties)$",
        r"(?i)pmd.*\.xml$",
        r"(?i)^ruleset.*\.xml$",
    ])
    .unwrap()
});

fn compile(patterns: &[&str]) -> Vec<Regex> {
    patterns
        .iter()
        .map(|p| Regex::new(&format!("(?i){p}")).unwrap())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimKind {
    NoMention,
    MentionCodeStyle,
    GoogleExplicit,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Evidence {
    pub file: String,
    pub line: usize,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCategory {
    pub value: ClaimKind,
    /// Matches supporting `value`.
    pub evidence: Vec<Evidence>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClaimOptions {
    /// Also scan Markdown under `docs/`.
    pub deep: bool,
}

fn matches(file: &str, text: &str, patterns: &[Regex]) -> Vec<Evidence> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for re in patterns {
            for m in re.find_iter(line) {
                out.push(Evidence {
                    file: file.to_string(),
                    line: i + 1,
                    text: m.as_str().to_string(),
                });
            }
        }
    }
    out
}

fn files_in(dir: &Path, prefix: &str) -> Result<Vec<(String, std::path::PathBuf)>> {
    let mut out = Vec::new();
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound && !prefix.is_empty() => return Ok(out),
        Err(e) => return Err(Error::io(dir, e)),
    };
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        if entry
            .file_type()
            .map_err(|e| Error::io(entry.path(), e))?
            .is_file()
        {
            let name = entry.file_name().to_string_lossy().into_owned();
            out.push((format!("{prefix}{name}"), entry.path()));
        }
    }
    out.sort();
    Ok(out)
}

fn is_markdown(name: &str) -> bool {
    name.to_ascii_lowercase().ends_with(".md")
}

/// Classifies the repository by its root Markdown files and any linter
/// configuration at the root.
pub fn scan_claims(root: &Path, opts: ClaimOptions) -> Result<ClaimCategory> {
    let root_files = files_in(root, "")?;
    let mut markdown: Vec<_> = root_files
        .iter()
        .filter(|(n, _)| is_markdown(n))
        .cloned()
        .collect();
    if opts.deep {
        markdown.extend(
            files_in(&root.join("docs"), "docs/")?
                .into_iter()
                .filter(|(n, _)| is_markdown(n)),
        );
    }

    let mut google = Vec::new();
    let mut general = Vec::new();
    for (name, path) in &markdown {
        let text =
            String::from_utf8_lossy(&fs::read(path).map_err(|e| Error::io(path, e))?).into_owned();
        google.extend(matches(name, &text, &GOOGLE));
        general.extend(matches(name, &text, &GENERAL));
    }
    for (name, path) in root_files.iter().filter(|(n, _)| LINTER_CONFIG.is_match(n)) {
        let text =
            String::from_utf8_lossy(&fs::read(path).map_err(|e| Error::io(path, e))?).into_owned();
        let hits = matches(name, &text, &GOOGLE_WORD);
        if hits.is_empty() {
            general.push(Evidence {
                file: name.clone(),
                line: 1,
                text: "linter configuration".into(),
            });
        } else {
            google.extend(hits);
        }
    }

    let (value, mut evidence) = if !google.is_empty() {
        (ClaimKind::GoogleExplicit, google)
    } else if !general.is_empty() {
        (ClaimKind::MentionCodeStyle, general)
    } else {
        (ClaimKind::NoMention, Vec::new())
    };
    evidence.sort();
    Ok(ClaimCategory { value, evidence })
}
