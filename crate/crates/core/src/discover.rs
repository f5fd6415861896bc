//! Locating analyzable Java sources inside a repository checkout.

use std::path::{Component, Path, PathBuf};

use walkdir::WalkDir;

use crate::error::{Error, Result};

/// Directory names skipped when no `src/main/java` root exists, and never
/// allowed above a `src/main/java` root.
pub const DEFAULT_EXCLUDES: &[&str] = &["target", "build", ".git"];

#[derive(Debug, Clone, Default)]
pub struct DiscoveryOptions {
    /// Extra exclusions. Entries containing `/` match a repository-relative
    /// path prefix; other entries match any directory name.
    pub excludes: Vec<String>,
}

/// Repository-relative `.java` paths in lexicographic order.
///
/// Every file below any `src/main/java` directory is returned. When the
/// tree has none, all `.java` files are returned instead, minus
/// `src/test`, `target`, `build` and `.git`.
pub fn discover_sources(root: &Path, opts: &DiscoveryOptions) -> Result<Vec<String>> {
    let meta = std::fs::metadata(root).map_err(|e| Error::io(root, e))?;
    if !meta.is_dir() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotADirectory, "not a directory"),
        ));
    }

    let mut all = Vec::new();
    let walker = WalkDir::new(root)
        .follow_links(false)
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || e.file_name() != ".git");
    for entry in walker {
        let entry = entry.map_err(|e| {
            let path = e
                .path()
                .map(Path::to_path_buf)
                .unwrap_or_else(|| root.to_path_buf());
            Error::io(path, e.into())
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        if entry.path().extension().and_then(|e| e.to_str()) != Some("java") {
            continue;
        }
        let rel = entry.path().strip_prefix(root).unwrap_or(entry.path());
        let parts = components(rel);
        if user_excluded(&parts, &opts.excludes) {
            continue;
        }
        all.push(parts);
    }

    let mut primary: Vec<String> = all
        .iter()
        .filter(|parts| match source_root_index(parts) {
            Some(i) => !parts[..i]
                .iter()
                .any(|p| DEFAULT_EXCLUDES.contains(&p.as_str())),
            None => false,
        })
        .map(|parts| parts.join("/"))
        .collect();

    if primary.is_empty() {
        primary = all
            .iter()
            .filter(|parts| !fallback_excluded(parts))
            .map(|parts| parts.join("/"))
            .collect();
    }
    primary.sort();
    primary.dedup();
    Ok(primary)
}

/// Index just past the last `src/main/java` run in `parts`, i.e. the first
/// package directory component.
pub fn source_root_index<S: AsRef<str>>(parts: &[S]) -> Option<usize> {
    let dirs = parts.len().saturating_sub(1);
    (0..dirs.saturating_sub(2))
        .rev()
        .find(|&i| {
            parts[i].as_ref() == "src"
                && parts[i + 1].as_ref() == "main"
                && parts[i + 2].as_ref() == "java"
        })
        .map(|i| i + 3)
}

fn components(rel: &Path) -> Vec<String> {
    rel.components()
        .filter_map(|c| match c {
            Component::Normal(s) => Some(s.to_string_lossy().into_owned()),
            _ => None,
        })
        .collect()
}

fn fallback_excluded(parts: &[String]) -> bool {
    let dirs = &parts[..parts.len().saturating_sub(1)];
    dirs.iter().any(|p| DEFAULT_EXCLUDES.contains(&p.as_str()))
        || dirs.windows(2).any(|w| w[0] == "src" && w[1] == "test")
}

fn user_excluded(parts: &[String], excludes: &[String]) -> bool {
    let dirs = &parts[..parts.len().saturating_sub(1)];
    let joined = parts.join("/");
    excludes.iter().any(|ex| {
        let ex = ex.trim_matches('/');
        if ex.contains('/') {
            joined == ex || joined.starts_with(&format!("{ex}/"))
        } else {
            dirs.iter().any(|d| d == ex)
        }
    })
}

/// Joins a repository-relative path onto `root`.
pub fn absolute(root: &Path, rel: &str) -> PathBuf {
    rel.split('/')
        .fold(root.to_path_buf(), |p, part| p.join(part))
}
