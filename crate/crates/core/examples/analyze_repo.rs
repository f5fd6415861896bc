//! Analyzes a repository and prints per-category scores.
//!
//! `cargo run --example analyze_repo -- path/to/repo`

use std::path::PathBuf;

use javastyle::analysis::{analyze_repository, AnalysisOptions};
use javastyle::lexicon::Lexicon;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/tests/fixtures/repos/clean-project"
            ))
        });
    let analysis = analyze_repository(&root, &AnalysisOptions::default(), Lexicon::bundled())?;

    println!("{} files", analysis.files.len());
    for s in &analysis.scores {
        let normalized = s
            .normalized
            .map_or("undefined".to_string(), |v| format!("{v:.4}"));
        println!(
            "{:<26} {:>5} / {:<5} {normalized}",
            s.category.label(),
            s.absolute,
            s.denominator
        );
    }
    println!("total {:.4}", analysis.total_normalized);
    for d in &analysis.diagnostics {
        eprintln!("note: {d}");
    }
    Ok(())
}
