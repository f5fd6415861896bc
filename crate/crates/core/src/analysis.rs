//! The single-snapshot pipeline: discover, parse, index, check, score.

use std::path::Path;

use rayon::prelude::*;

use crate::category::Violation;
use crate::checks::{run_all, OrderingConfig};
use crate::discover::{absolute, discover_sources, DiscoveryOptions};
use crate::error::{Error, Result};
use crate::index::ProjectIndex;
use crate::lexicon::Lexicon;
use crate::model::SourceFileModel;
use crate::parse::parse_compilation_unit;
use crate::scoring::{
    count_constructs, normalize, total_normalized, CategoryScore, ConstructCounts,
};

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub discovery: DiscoveryOptions,
    pub ordering: OrderingConfig,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub files: Vec<String>,
    /// Files that could not be read or parsed, and index problems.
    pub diagnostics: Vec<String>,
    pub violations: Vec<Violation>,
    pub counts: ConstructCounts,
    pub scores: Vec<CategoryScore>,
    pub total_normalized: f64,
}

impl Analysis {
    pub fn score(&self, category: crate::category::Category) -> &CategoryScore {
        self.scores
            .iter()
            .find(|s| s.category == category)
            .expect("every category is scored")
    }
}

enum Loaded {
    Model(Box<SourceFileModel>),
    Skipped(String),
}

fn load(root: &Path, rel: &str) -> Result<Loaded> {
    let path = absolute(root, rel);
    let bytes = std::fs::read(&path).map_err(|e| Error::io(&path, e))?;
    let Ok(text) = String::from_utf8(bytes) else {
        return Ok(Loaded::Skipped(
            Error::InvalidUtf8 {
                path: rel.to_string(),
            }
            .to_string(),
        ));
    };
    Ok(match parse_compilation_unit(&text, rel) {
        Ok(m) => Loaded::Model(Box::new(m)),
        Err(e) => Loaded::Skipped(format!("skipped {e}")),
    })
}

/// Parses every discovered file. Unreadable directories are fatal; files
/// with syntax errors or invalid UTF-8 are skipped with a diagnostic.
pub fn load_models(
    root: &Path,
    discovery: &DiscoveryOptions,
) -> Result<(Vec<SourceFileModel>, Vec<String>)> {
    let files = discover_sources(root, discovery)?;
    let loaded: Vec<Loaded> = files
        .par_iter()
        .map(|rel| load(root, rel))
        .collect::<Result<_>>()?;
    let mut models = Vec::new();
    let mut diagnostics = Vec::new();
    for l in loaded {
        match l {
            Loaded::Model(m) => models.push(*m),
            Loaded::Skipped(d) => diagnostics.push(d),
        }
    }
    Ok((models, diagnostics))
}

/// Checks and scores already-parsed models.
pub fn analyze_models(
    models: &[SourceFileModel],
    lexicon: &Lexicon,
    ordering: &OrderingConfig,
) -> Analysis {
    let index = ProjectIndex::build(models);
    let violations = run_all(models, &index, lexicon, ordering);
    let counts = count_constructs(models, &index);
    let scores = normalize(&violations, &counts);
    Analysis {
        files: models.iter().map(|m| m.path.clone()).collect(),
        diagnostics: index.diagnostics.clone(),
        total_normalized: total_normalized(&scores),
        violations,
        counts,
        scores,
    }
}

pub fn analyze_repository(
    root: &Path,
    opts: &AnalysisOptions,
    lexicon: &Lexicon,
) -> Result<Analysis> {
    let (models, mut diagnostics) = load_models(root, &opts.discovery)?;
    let mut analysis = analyze_models(&models, lexicon, &opts.ordering);
    diagnostics.append(&mut analysis.diagnostics);
    diagnostics.extend(crate::scoring::stats::undefined_diagnostics(
        &analysis.scores,
    ));
    analysis.diagnostics = diagnostics;
    Ok(analysis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Category;

    #[test]
    fn skips_broken_files() {
        let dir = tempfile::tempdir().unwrap();
        let pkg = dir.path().join("src/main/java/org/x");
        std::fs::create_dir_all(&pkg).unwrap();
        std::fs::write(pkg.join("Good.java"), "package org.x;\nclass Good { void run() { try { run(); } catch (RuntimeException e) {} } }\n").unwrap();
        std::fs::write(pkg.join("Bad.java"), "package org.x;\nclass Bad {").unwrap();
        std::fs::write(pkg.join("Latin.java"), [0xffu8, 0xfe, 0x00]).unwrap();
        let a = analyze_repository(dir.path(), &AnalysisOptions::default(), Lexicon::bundled())
            .unwrap();
        assert_eq!(a.files, ["src/main/java/org/x/Good.java"]);
        assert_eq!(a.diagnostics.len(), 2);
        assert_eq!(a.score(Category::EmptyCatchBlock).normalized, Some(1.0));
    }

    #[test]
    fn missing_root_is_fatal() {
        let r = analyze_repository(
            Path::new("/nonexistent/repo"),
            &AnalysisOptions::default(),
            Lexicon::bundled(),
        );
        assert!(matches!(r, Err(Error::Io { .. })));
    }
}
