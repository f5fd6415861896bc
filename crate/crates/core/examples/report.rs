//! Renders one analysis in each output format.

use std::io::Write;
use std::path::Path;

use javastyle::analysis::{analyze_repository, AnalysisOptions};
use javastyle::config::Settings;
use javastyle::lexicon::Lexicon;
use javastyle::report::{emit_report, Format, Report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = Path::new(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/seeded/EmptyCatchBlock"
    ));
    let settings = Settings::default();
    let analysis = analyze_repository(root, &AnalysisOptions::default(), Lexicon::bundled())?;
    let report = Report::new(
        "seeded/EmptyCatchBlock",
        &settings.digest(),
        analysis,
        settings.threshold,
    );

    let mut out = std::io::stdout().lock();
    for format in [Format::Markdown, Format::Csv, Format::Json] {
        writeln!(out, "==> {format:?}")?;
        out.write_all(&emit_report(&report, format)?)?;
        writeln!(out)?;
    }
    Ok(())
}
