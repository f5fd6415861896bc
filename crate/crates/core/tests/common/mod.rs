#![allow(dead_code)]

use std::path::{Path, PathBuf};

use javastyle::analysis::{analyze_repository, Analysis, AnalysisOptions};
use javastyle::category::Category;
use javastyle::lexicon::Lexicon;

pub fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

pub fn analyze(root: &Path) -> Analysis {
    analyze_repository(root, &AnalysisOptions::default(), Lexicon::bundled()).unwrap()
}

pub fn count(a: &Analysis, category: Category) -> usize {
    a.violations
        .iter()
        .filter(|v| v.category == category)
        .count()
}

/// Seeded violation count of each fixture under `fixtures/seeded`.
pub const SEEDED: [(Category, usize); 17] = [
    (Category::ClassNames, 3),
    (Category::MethodNames, 4),
    (Category::VariableNames, 4),
    (Category::PackageNames, 2),
    (Category::JavadocFormatting, 7),
    (Category::JavadocClass, 2),
    (Category::JavadocMethod, 3),
    (Category::JavadocConstructor, 2),
    (Category::JavadocField, 2),
    (Category::PrivateInstances, 2),
    (Category::Useless, 5),
    (Category::StringConcatenation, 2),
    (Category::MissingOverride, 2),
    (Category::EmptyCatchBlock, 2),
    (Category::UnqualifiedStaticAccess, 2),
    (Category::FinalizeOverride, 1),
    (Category::Ordering, 5),
];

/// Writes `files` (relative path, contents) under `root`.
pub fn write_tree(root: &Path, files: &[(&str, &str)]) {
    for (rel, text) in files {
        let p = root.join(rel);
        std::fs::create_dir_all(p.parent().unwrap()).unwrap();
        std::fs::write(p, text).unwrap();
    }
}

pub fn git(repo: &Path, args: &[&str], date: Option<&str>) -> String {
    let mut cmd = std::process::Command::new("git");
    cmd.arg("-C").arg(repo).args(args);
    cmd.env("GIT_AUTHOR_NAME", "Fixture")
        .env("GIT_AUTHOR_EMAIL", "fixture@example.com")
        .env("GIT_COMMITTER_NAME", "Fixture")
        .env("GIT_COMMITTER_EMAIL", "fixture@example.com")
        .env("GIT_CONFIG_NOSYSTEM", "1")
        .env("HOME", repo);
    if let Some(d) = date {
        cmd.env("GIT_AUTHOR_DATE", d).env("GIT_COMMITTER_DATE", d);
    }
    let out = cmd.output().expect("git runs");
    assert!(
        out.status.success(),
        "git {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

pub fn init_repo(repo: &Path) {
    git(repo, &["init", "-q", "-b", "main"], None);
}

pub fn commit_all(repo: &Path, message: &str, date: &str) {
    git(repo, &["add", "-A"], None);
    git(
        repo,
        &["commit", "-q", "--allow-empty", "-m", message],
        Some(date),
    );
}

pub const SERVICE_CLEAN: &str = "package org.app;\n\nclass Service {\n  void run(String input) {\n    try {\n      Integer.parseInt(input);\n    } catch (NumberFormatException e) {\n      throw new IllegalStateException(e);\n    }\n  }\n}\n";

pub const SERVICE_EMPTY_CATCH: &str = "package org.app;\n\nclass Service {\n  void run(String input) {\n    try {\n      Integer.parseInt(input);\n    } catch (NumberFormatException e) {\n      throw new IllegalStateException(e);\n    }\n    try {\n      Integer.parseInt(input);\n    } catch (NumberFormatException e) {\n    }\n  }\n}\n";

/// Mature repository: a first commit in 2021-01, then commits on days 3,
/// 14 and 20 of every month from 2024-02 to 2025-01. In 2024-07, the
/// sixth month of that window, a second and empty catch clause appears.
pub fn synthetic_history(repo: &Path) {
    init_repo(repo);
    let file = "src/main/java/org/app/Service.java";
    write_tree(repo, &[(file, SERVICE_CLEAN), ("NOTES.txt", "start")]);
    commit_all(repo, "start", "2021-01-14T12:00:00Z");
    let months = (2..=12).map(|m| (2024, m)).chain([(2025, 1)]);
    for (year, month) in months {
        let text = if (year, month) >= (2024, 7) {
            SERVICE_EMPTY_CATCH
        } else {
            SERVICE_CLEAN
        };
        for day in [3, 14, 20] {
            let note = format!("{year}-{month:02}-{day:02}");
            write_tree(repo, &[(file, text), ("NOTES.txt", &note)]);
            commit_all(repo, &note, &format!("{note}T12:00:00Z"));
        }
    }
}
