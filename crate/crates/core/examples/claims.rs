//! Classifies what a repository's documentation says about code style.
//!
//! `cargo run --example claims -- path/to/repo`

use std::path::PathBuf;

use javastyle::claims::{scan_claims, ClaimOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/tests/fixtures/claims/google"
            ))
        });
    let claim = scan_claims(&root, ClaimOptions { deep: true })?;
    println!("{:?}", claim.value);
    for e in &claim.evidence {
        println!("  {}:{} {}", e.file, e.line, e.text);
    }
    Ok(())
}
