mod common;

use chrono::NaiveDate;
use common::{commit_all, git, init_repo, synthetic_history, write_tree};
use javastyle::category::Category;
use javastyle::history::{evolve, read_commits, select_monthly_commit, EvolveOptions, Month};
use javastyle::lexicon::Lexicon;

fn as_of() -> NaiveDate {
    NaiveDate::from_ymd_opt(2025, 1, 31).unwrap()
}

fn empty_catch(s: &javastyle::history::EvolutionSample) -> Option<f64> {
    s.scores
        .iter()
        .find(|c| c.category == Category::EmptyCatchBlock)
        .unwrap()
        .normalized
}

#[test]
fn selects_january_tenth() {
    let dir = tempfile::tempdir().unwrap();
    init_repo(dir.path());
    for day in ["02", "10", "27"] {
        write_tree(dir.path(), &[("day.txt", day)]);
        commit_all(dir.path(), day, &format!("2024-01-{day}T09:00:00Z"));
    }
    let commits = read_commits(dir.path()).unwrap();
    assert_eq!(commits.len(), 3);
    let picked = select_monthly_commit(&commits).unwrap();
    assert_eq!(picked.timestamp.to_rfc3339(), "2024-01-10T09:00:00+00:00");
}

#[test]
fn evolution_steps_at_the_seeded_month_and_restores_the_tree() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path();
    synthetic_history(repo);
    let head_before = git(repo, &["rev-parse", "HEAD"], None);
    let branch_before = git(repo, &["symbolic-ref", "HEAD"], None);

    let opts = EvolveOptions::new(as_of());
    let started = std::time::Instant::now();
    let e = evolve(repo, &opts, Lexicon::bundled()).unwrap();
    eprintln!("evolve took {:?}", started.elapsed());
    assert!(e.eligibility.eligible, "{:?}", e.eligibility);
    assert_eq!(e.samples.len(), 12);
    assert_eq!(e.samples[0].month_label, "2024-02");
    assert_eq!(e.samples[11].month_label, "2025-01");

    for w in e.samples.windows(2) {
        let a = w[0].commit.as_ref().unwrap().timestamp;
        let b = w[1].commit.as_ref().unwrap().timestamp;
        assert!(a < b);
    }
    for s in &e.samples {
        let c = s.commit.as_ref().unwrap();
        assert_eq!(c.timestamp.format("%d").to_string(), "14");
        assert!(s.error.is_none());
    }
    let series: Vec<f64> = e.samples.iter().map(|s| empty_catch(s).unwrap()).collect();
    assert!(series[..5].iter().all(|v| *v == 0.0), "{series:?}");
    assert!(series[5..].iter().all(|v| *v == 0.5), "{series:?}");
    // 2024 is a leap year: Feb 14 to Mar 14
    assert_eq!(e.spacing.min_gap_days, Some(29));

    assert_eq!(git(repo, &["rev-parse", "HEAD"], None), head_before);
    assert_eq!(git(repo, &["symbolic-ref", "HEAD"], None), branch_before);
    assert_eq!(git(repo, &["status", "--porcelain"], None), "");

    let again = evolve(repo, &opts, Lexicon::bundled()).unwrap();
    assert_eq!(again, e);
}

#[test]
fn refuses_dirty_tree_and_ineligible_history() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path();
    init_repo(repo);
    write_tree(repo, &[("a.txt", "1")]);
    commit_all(repo, "one", "2024-12-05T00:00:00Z");

    let opts = EvolveOptions::new(as_of());
    let err = evolve(repo, &opts, Lexicon::bundled())
        .unwrap_err()
        .to_string();
    assert!(err.contains("not eligible") && err.contains("age"), "{err}");

    let mut forced = opts.clone();
    forced.force = true;
    let e = evolve(repo, &forced, Lexicon::bundled()).unwrap();
    assert_eq!(e.samples.len(), 12);
    assert_eq!(e.samples.iter().filter(|s| s.commit.is_some()).count(), 1);

    write_tree(repo, &[("a.txt", "2")]);
    let err = evolve(repo, &forced, Lexicon::bundled())
        .unwrap_err()
        .to_string();
    assert!(err.contains("uncommitted"), "{err}");
    assert_eq!(std::fs::read_to_string(repo.join("a.txt")).unwrap(), "2");
}

#[test]
fn detached_head_is_restored() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path();
    synthetic_history(repo);
    let target = git(repo, &["rev-parse", "HEAD~5"], None);
    git(repo, &["checkout", "-q", "--detach", target.trim()], None);
    let mut opts = EvolveOptions::new(as_of());
    opts.force = true;
    evolve(repo, &opts, Lexicon::bundled()).unwrap();
    assert_eq!(git(repo, &["rev-parse", "HEAD"], None), target);
    assert_eq!(Month::of(as_of()).to_string(), "2025-01");
}
