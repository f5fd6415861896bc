//! Monthly replay of a repository's git history.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::Command;

use chrono::{DateTime, Datelike, Months, NaiveDate, Utc};
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_repository, AnalysisOptions};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::scoring::CategoryScore;

pub const DEFAULT_MONTHS: usize = 12;
pub const DEFAULT_MIN_AGE_MONTHS: u32 = 36;
/// Gap between consecutive selections below which the spacing report
/// flags a pair.
pub const MIN_SPACING_DAYS: i64 = 10;
const MID_MONTH_DAY: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommitRecord {
    pub id: String,
    pub timestamp: DateTime<Utc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Month {
    pub year: i32,
    pub month: u32,
}

impl Month {
    pub fn of(date: NaiveDate) -> Month {
        Month {
            year: date.year(),
            month: date.month(),
        }
    }

    fn first_day(self) -> NaiveDate {
        NaiveDate::from_ymd_opt(self.year, self.month, 1).expect("valid month")
    }

    pub fn pred(self) -> Month {
        Month::of(self.first_day() - Months::new(1))
    }
}

impl fmt::Display for Month {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

/// The `n` calendar months ending with the month of `as_of`, oldest first.
pub fn window_months(as_of: NaiveDate, n: usize) -> Vec<Month> {
    let mut out = Vec::with_capacity(n);
    let mut m = Month::of(as_of);
    for _ in 0..n {
        out.push(m);
        m = m.pred();
    }
    out.reverse();
    out
}

/// Last day of the month before `today`, the default reference date.
pub fn default_as_of(today: NaiveDate) -> NaiveDate {
    Month::of(today)
        .first_day()
        .pred_opt()
        .expect("date in range")
}

fn in_window(c: &CommitRecord, as_of: NaiveDate) -> bool {
    c.timestamp.date_naive() <= as_of
}

/// Commit counts per UTC calendar month over the window; empty months
/// are present with 0.
pub fn monthly_activity(
    commits: &[CommitRecord],
    as_of: NaiveDate,
    months: usize,
) -> BTreeMap<Month, usize> {
    let mut buckets: BTreeMap<Month, usize> = window_months(as_of, months)
        .into_iter()
        .map(|m| (m, 0))
        .collect();
    for c in commits.iter().filter(|c| in_window(c, as_of)) {
        if let Some(n) = buckets.get_mut(&Month::of(c.timestamp.date_naive())) {
            *n += 1;
        }
    }
    buckets
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eligibility {
    pub eligible: bool,
    pub reasons: Vec<String>,
}

fn whole_months_between(from: NaiveDate, to: NaiveDate) -> i64 {
    let mut n = (to.year() - from.year()) as i64 * 12 + to.month() as i64 - from.month() as i64;
    if to.day() < from.day() {
        n -= 1;
    }
    n
}

/// Maturity and activity filter: the first commit is at least
/// `min_age_months` old at `as_of` and every window month has a commit.
pub fn is_eligible(
    commits: &[CommitRecord],
    as_of: NaiveDate,
    min_age_months: u32,
    months: usize,
) -> Eligibility {
    let mut reasons = Vec::new();
    match commits
        .iter()
        .filter(|c| in_window(c, as_of))
        .map(|c| c.timestamp)
        .min()
    {
        None => reasons.push("empty history".to_string()),
        Some(first) => {
            let age = whole_months_between(first.date_naive(), as_of);
            if age < min_age_months as i64 {
                reasons.push(format!(
                    "age: first commit {age} months before {as_of}, need {min_age_months}"
                ));
            }
            let silent: Vec<String> = monthly_activity(commits, as_of, months)
                .into_iter()
                .filter(|(_, n)| *n == 0)
                .map(|(m, _)| m.to_string())
                .collect();
            if !silent.is_empty() {
                reasons.push(format!("activity gap: no commits in {}", silent.join(", ")));
            }
        }
    }
    Eligibility {
        eligible: reasons.is_empty(),
        reasons,
    }
}

/// The commit whose day of month is closest to the 15th, earlier commit
/// on ties.
pub fn select_monthly_commit(commits: &[CommitRecord]) -> Result<&CommitRecord> {
    commits
        .iter()
        .min_by_key(|c| (c.timestamp.day().abs_diff(MID_MONTH_DAY), c.timestamp))
        .ok_or_else(|| Error::Invalid("no commits in month".into()))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpacingReport {
    pub min_gap_days: Option<i64>,
    /// Consecutive selections closer than [`MIN_SPACING_DAYS`].
    pub close_pairs: Vec<(String, String, i64)>,
}

pub fn spacing_report(selected: &[CommitRecord]) -> SpacingReport {
    let mut sorted: Vec<&CommitRecord> = selected.iter().collect();
    sorted.sort_by_key(|c| c.timestamp);
    let mut report = SpacingReport::default();
    for w in sorted.windows(2) {
        let gap = (w[1].timestamp.date_naive() - w[0].timestamp.date_naive()).num_days();
        report.min_gap_days = Some(report.min_gap_days.map_or(gap, |m| m.min(gap)));
        if gap < MIN_SPACING_DAYS {
            report
                .close_pairs
                .push((w[0].id.clone(), w[1].id.clone(), gap));
        }
    }
    report
}

fn git(repo: &Path, args: &[&str]) -> Result<String> {
    let out = Command::new("git")
        .arg("-C")
        .arg(repo)
        .args(args)
        .output()
        .map_err(|e| Error::Git(format!("cannot run git: {e}")))?;
    if !out.status.success() {
        return Err(Error::Git(format!(
            "git {} failed: {}",
            args.join(" "),
            String::from_utf8_lossy(&out.stderr).trim()
        )));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

/// First-parent history of HEAD with committer timestamps.
pub fn read_commits(repo: &Path) -> Result<Vec<CommitRecord>> {
    let log = git(repo, &["log", "--first-parent", "--format=%H %ct", "HEAD"])?;
    log.lines()
        .map(|line| {
            let (id, ts) = line
                .split_once(' ')
                .ok_or_else(|| Error::Git(format!("unexpected log line {line:?}")))?;
            let secs: i64 = ts
                .parse()
                .map_err(|_| Error::Git(format!("bad timestamp {ts:?}")))?;
            let timestamp = DateTime::from_timestamp(secs, 0)
                .ok_or_else(|| Error::Git(format!("timestamp out of range: {secs}")))?;
            Ok(CommitRecord {
                id: id.to_string(),
                timestamp,
            })
        })
        .collect()
}

/// Checks `original` back out when dropped.
struct Restore {
    repo: PathBuf,
    original: String,
}

impl Drop for Restore {
    fn drop(&mut self) {
        let _ = git(&self.repo, &["checkout", "-q", &self.original]);
    }
}

fn current_ref(repo: &Path) -> Result<String> {
    match git(repo, &["symbolic-ref", "-q", "--short", "HEAD"]) {
        Ok(branch) if !branch.trim().is_empty() => Ok(branch.trim().to_string()),
        _ => Ok(git(repo, &["rev-parse", "HEAD"])?.trim().to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EvolutionSample {
    pub month_label: String,
    pub commit: Option<CommitRecord>,
    pub scores: Vec<CategoryScore>,
    #[serde(serialize_with = "crate::fixed::option::serialize")]
    pub total_normalized: Option<f64>,
    /// Set when the month could not be analyzed.
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct EvolveOptions {
    pub months: usize,
    pub as_of: NaiveDate,
    pub min_age_months: u32,
    /// Replay even when the repository fails the eligibility filter.
    pub force: bool,
    pub analysis: AnalysisOptions,
}

impl EvolveOptions {
    pub fn new(as_of: NaiveDate) -> Self {
        EvolveOptions {
            months: DEFAULT_MONTHS,
            as_of,
            min_age_months: DEFAULT_MIN_AGE_MONTHS,
            force: false,
            analysis: AnalysisOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Evolution {
    pub eligibility: Eligibility,
    pub samples: Vec<EvolutionSample>,
    pub spacing: SpacingReport,
}

/// One analyzed snapshot per window month, oldest first. The work tree
/// must be clean and is returned to its original ref afterwards.
pub fn evolve(repo: &Path, opts: &EvolveOptions, lexicon: &Lexicon) -> Result<Evolution> {
    let status = git(repo, &["status", "--porcelain"])?;
    if !status.trim().is_empty() {
        return Err(Error::Git(format!(
            "{} has uncommitted changes",
            repo.display()
        )));
    }
    let commits = read_commits(repo)?;
    let eligibility = is_eligible(&commits, opts.as_of, opts.min_age_months, opts.months);
    if !eligibility.eligible && !opts.force {
        return Err(Error::Invalid(format!(
            "repository not eligible: {}",
            eligibility.reasons.join("; ")
        )));
    }

    let mut by_month: BTreeMap<Month, Vec<CommitRecord>> = BTreeMap::new();
    for c in commits.into_iter().filter(|c| in_window(c, opts.as_of)) {
        by_month
            .entry(Month::of(c.timestamp.date_naive()))
            .or_default()
            .push(c);
    }

    let _restore = Restore {
        repo: repo.to_path_buf(),
        original: current_ref(repo)?,
    };
    let mut samples = Vec::new();
    let mut selected = Vec::new();
    for month in window_months(opts.as_of, opts.months) {
        let mut sample = EvolutionSample {
            month_label: month.to_string(),
            commit: None,
            scores: Vec::new(),
            total_normalized: None,
            error: None,
        };
        let Some(commit) = by_month
            .get(&month)
            .and_then(|cs| select_monthly_commit(cs).ok())
        else {
            sample.error = Some("no commit in month".into());
            samples.push(sample);
            continue;
        };
        sample.commit = Some(commit.clone());
        selected.push(commit.clone());
        let run = git(repo, &["checkout", "-q", "--detach", &commit.id])
            .and_then(|_| analyze_repository(repo, &opts.analysis, lexicon));
        match run {
            Ok(a) => {
                sample.total_normalized = Some(a.total_normalized);
                sample.scores = a.scores;
            }
            Err(e) => sample.error = Some(e.to_string()),
        }
        samples.push(sample);
    }
    Ok(Evolution {
        eligibility,
        spacing: spacing_report(&selected),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;
    use proptest::prelude::*;

    fn at(y: i32, m: u32, d: u32) -> CommitRecord {
        CommitRecord {
            id: format!("{y}{m:02}{d:02}"),
            timestamp: Utc.with_ymd_and_hms(y, m, d, 12, 0, 0).unwrap(),
        }
    }

    fn date(y: i32, m: u32, d: u32) -> NaiveDate {
        NaiveDate::from_ymd_opt(y, m, d).unwrap()
    }

    #[test]
    fn selection_examples() {
        let jan = [at(2024, 1, 2), at(2024, 1, 10), at(2024, 1, 27)];
        assert_eq!(select_monthly_commit(&jan).unwrap().id, "20240110");
        assert_eq!(
            select_monthly_commit(&[at(2024, 3, 30)]).unwrap().id,
            "20240330"
        );
        assert_eq!(
            select_monthly_commit(&[at(2024, 5, 16), at(2024, 5, 14)])
                .unwrap()
                .id,
            "20240514"
        );
        assert!(select_monthly_commit(&[]).is_err());
    }

    #[test]
    fn activity_buckets() {
        let as_of = date(2025, 1, 31);
        let months = window_months(as_of, 12);
        assert_eq!(months[0].to_string(), "2024-02");
        assert_eq!(months[11].to_string(), "2025-01");
        assert!(monthly_activity(&[], as_of, 12).values().all(|n| *n == 0));
        let three = [at(2024, 6, 1), at(2024, 6, 2), at(2024, 6, 3)];
        let a = monthly_activity(&three, as_of, 12);
        assert_eq!(a.len(), 12);
        assert_eq!(a.values().filter(|n| **n == 3).count(), 1);
        assert_eq!(a.values().filter(|n| **n == 0).count(), 11);
    }

    #[test]
    fn eligibility_examples() {
        let as_of = date(2025, 1, 31);
        let mut every: Vec<_> = window_months(as_of, 40)
            .into_iter()
            .map(|m| at(m.year, m.month, 5))
            .collect();
        assert!(is_eligible(&every, as_of, 36, 12).eligible);
        every.retain(|c| c.timestamp.month() != 7 || c.timestamp.year() != 2024);
        let e = is_eligible(&every, as_of, 36, 12);
        assert!(!e.eligible && e.reasons[0].starts_with("activity gap"));
        let young: Vec<_> = window_months(as_of, 12)
            .into_iter()
            .map(|m| at(m.year, m.month, 5))
            .collect();
        let e = is_eligible(&young, as_of, 36, 12);
        assert!(e.reasons.len() == 1 && e.reasons[0].starts_with("age"));
        assert_eq!(is_eligible(&[], as_of, 36, 12).reasons, ["empty history"]);
    }

    #[test]
    fn spacing_examples() {
        let mid: Vec<_> = (1..=12).map(|m| at(2024, m, 15)).collect();
        let r = spacing_report(&mid);
        assert!((28..=31).contains(&r.min_gap_days.unwrap()));
        assert!(r.close_pairs.is_empty());
        let r = spacing_report(&[at(2024, 1, 28), at(2024, 2, 3)]);
        assert_eq!(r.min_gap_days, Some(6));
        assert_eq!(r.close_pairs.len(), 1);
        assert_eq!(spacing_report(&[at(2024, 1, 1)]), SpacingReport::default());
    }

    #[test]
    fn default_reference_date() {
        assert_eq!(default_as_of(date(2025, 2, 10)), date(2025, 1, 31));
        assert_eq!(default_as_of(date(2025, 1, 1)), date(2024, 12, 31));
    }

    proptest! {
        #[test]
        fn selection_is_optimal(days in prop::collection::vec((1u32..=28, 0u32..24), 1..12)) {
            let commits: Vec<CommitRecord> = days
                .iter()
                .enumerate()
                .map(|(i, (d, h))| CommitRecord {
                    id: i.to_string(),
                    timestamp: Utc.with_ymd_and_hms(2024, 2, *d, *h, 0, 0).unwrap(),
                })
                .collect();
            let best = select_monthly_commit(&commits).unwrap();
            let dist = |c: &CommitRecord| (c.timestamp.day() as i64 - 15).abs();
            for c in &commits {
                prop_assert!(dist(c) >= dist(best));
                if dist(c) == dist(best) {
                    prop_assert!(c.timestamp >= best.timestamp);
                }
            }
        }

        #[test]
        fn window_is_contiguous(y in 1990i32..2100, m in 1u32..=12, n in 1usize..40) {
            let w = window_months(date(y, m, 1), n);
            prop_assert_eq!(w.len(), n);
            prop_assert_eq!(*w.last().unwrap(), Month { year: y, month: m });
            for pair in w.windows(2) {
                prop_assert_eq!(pair[1].pred(), pair[0]);
            }
        }
    }
}
