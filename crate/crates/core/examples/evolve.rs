//! Replays the monthly history of a git repository and prints the total
//! score per month. The work tree must be clean; it is restored afterwards.
//!
//! `cargo run --example evolve -- path/to/repo [YYYY-MM-DD]`

use std::path::PathBuf;

use chrono::{NaiveDate, Utc};
use javastyle::history::{default_as_of, evolve, EvolveOptions};
use javastyle::lexicon::Lexicon;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let Some(repo) = args.next().map(PathBuf::from) else {
        eprintln!("usage: evolve <repo> [as-of]");
        std::process::exit(2);
    };
    let as_of = match args.next() {
        Some(d) => NaiveDate::parse_from_str(&d, "%Y-%m-%d")?,
        None => default_as_of(Utc::now().date_naive()),
    };
    let mut opts = EvolveOptions::new(as_of);
    opts.force = true;

    let evolution = evolve(&repo, &opts, Lexicon::bundled())?;
    for reason in &evolution.eligibility.reasons {
        println!("not eligible: {reason}");
    }
    for s in &evolution.samples {
        match (&s.commit, &s.error) {
            (Some(c), None) => println!(
                "{} {} {:.4}",
                s.month_label,
                &c.id[..10],
                s.total_normalized.unwrap_or(0.0)
            ),
            (_, Some(e)) => println!("{} error: {e}", s.month_label),
            (None, None) => println!("{} no commit", s.month_label),
        }
    }
    println!(
        "smallest gap between samples: {:?} days",
        evolution.spacing.min_gap_days
    );
    Ok(())
}
