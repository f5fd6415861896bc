//! Draws a reproducible stratified sample of violations for manual review.

use javastyle::category::{Category, Violation};
use javastyle::scoring::{stratified_sample, RepoViolations};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let repos: Vec<RepoViolations> = (0..12)
        .map(|i| RepoViolations {
            repo: format!("repo-{i:02}"),
            violations: vec![
                Violation::new(
                    Category::EmptyCatchBlock,
                    "src/Io.java",
                    10 + i,
                    "empty catch",
                ),
                Violation::new(Category::MethodNames, "src/Api.java", 3, "method name"),
            ],
        })
        .collect();

    let sample = stratified_sample(&repos, 4, 7)?;
    println!(
        "group size {}, groups {:?}",
        sample.group_size, sample.groups
    );
    for (category, picks) in &sample.samples {
        for p in picks {
            println!(
                "{category} group {} {} {}",
                p.group,
                p.repo,
                p.violation.anchor()
            );
        }
    }
    for d in &sample.diagnostics {
        println!("note: {d}");
    }
    Ok(())
}
