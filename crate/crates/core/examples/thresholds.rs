//! Corpus statistics: the share of repositories under each threshold and
//! the adherence verdict for one repository.

use javastyle::category::Category;
use javastyle::scoring::{
    aggregate, classify_adherence, threshold_table, CategoryScore, DEFAULT_THRESHOLD,
    DEFAULT_THRESHOLDS,
};

fn repo(seed: u64) -> Vec<CategoryScore> {
    Category::ALL
        .into_iter()
        .enumerate()
        .map(|(i, category)| {
            let absolute = (seed * 7 + i as u64 * 3) % 23;
            CategoryScore {
                category,
                absolute,
                denominator: 100,
                normalized: Some(absolute as f64 / 100.0),
            }
        })
        .collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus: Vec<Vec<CategoryScore>> = (0..20).map(repo).collect();

    let stats = aggregate(&corpus)?;
    for c in &stats.categories {
        if let Some(n) = &c.normalized {
            println!(
                "{:<26} mean {:.4} median {:.4}",
                c.category.label(),
                n.mean,
                n.median
            );
        }
    }

    let table = threshold_table(&corpus, &DEFAULT_THRESHOLDS)?;
    let header: Vec<String> = table.thresholds.iter().map(|t| format!("<{t}")).collect();
    println!("\n{:<26} {}", "", header.join(" "));
    for row in &table.rows {
        let cells: Vec<String> = row
            .percentages
            .iter()
            .map(|p| format!("{p:>5.1}"))
            .collect();
        println!("{:<26} {}", row.category.label(), cells.join(" "));
    }

    let verdict = classify_adherence(&corpus[3], DEFAULT_THRESHOLD);
    println!("\ncode style adherent: {}", verdict.code_style);
    println!(
        "programming practices adherent: {}",
        verdict.programming_practices
    );
    Ok(())
}
