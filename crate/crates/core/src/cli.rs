//! Command-line front end. [`run`] maps arguments to an exit code:
//! 0 success, 1 threshold exceeded with `--fail-over`, 2 usage error,
//! 3 I/O or other fatal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::{NaiveDate, Utc};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::analysis::{analyze_repository, AnalysisOptions};
use crate::claims::{scan_claims, ClaimOptions};
use crate::config::{ConfigFile, Settings};
use crate::discover::DiscoveryOptions;
use crate::error::{Error, Result};
use crate::history::{default_as_of, evolve, EvolveOptions};
use crate::lexicon::Lexicon;
use crate::report::{
    emit_corpus_report, emit_json, emit_report, CorpusEntry, CorpusReport, Format, Report,
    TOOL_VERSION,
};
use crate::scoring::{
    aggregate, classify_adherence, stratified_sample, threshold_table, RepoViolations,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL_OVER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FATAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "javastyle",
    version,
    about = "Style and best-practice audit for Java repositories"
)]
struct Cli {
    /// Settings file; defaults to $JAVASTYLE_CONFIG when set.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Member ordering convention.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    ordering: Option<u8>,
    /// Word list replacing the bundled lexicon.
    #[arg(long, value_name = "FILE")]
    lexicon: Option<PathBuf>,
    /// Extra path prefix or directory name to skip; repeatable.
    #[arg(long, value_name = "PATTERN")]
    exclude: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check one repository and print a report.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        threshold: Option<f64>,
        /// Exit 1 unless both adherence groups are under the threshold.
        #[arg(long)]
        fail_over: bool,
        /// Also scan Markdown under docs/ for style claims.
        #[arg(long)]
        deep_claims: bool,
    },
    /// Replay the repository's recent history, one commit per month.
    Evolve {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        months: Option<usize>,
        /// Last day of the window (YYYY-MM-DD); defaults to the end of last month.
        #[arg(long, value_name = "DATE")]
        as_of: Option<NaiveDate>,
        #[arg(long, value_name = "MONTHS")]
        min_age: Option<u32>,
        /// Replay even if the maturity or activity filter fails.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Classify what the repository's documentation claims about style.
    Claims {
        path: PathBuf,
        #[arg(long)]
        deep_claims: bool,
    },
    /// Draw a stratified validation sample from saved JSON reports.
    Sample {
        scores_dir: PathBuf,
        #[arg(long)]
        groups: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Analyze every repository listed in a file and aggregate.
    Corpus {
        paths_file: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        threshold: Option<f64>,
        /// Repositories analyzed concurrently.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Outcome {
    Done,
    OverThreshold,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) | Error::Config { .. } | Error::Lexicon { .. } => EXIT_USAGE,
        _ => EXIT_FATAL,
    }
}

/// Runs the command line in `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::OverThreshold) => EXIT_FAIL_OVER,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn settings(
    cli_config: Option<&Path>,
    common: Option<&Common>,
    threshold: Option<f64>,
) -> Result<Settings> {
    let mut s = Settings::from_file(&ConfigFile::discover(cli_config)?)?;
    if let Some(c) = common {
        if let Some(id) = c.ordering {
            s.set_ordering(id)?;
        }
        if let Some(l) = &c.lexicon {
            s.lexicon = Some(l.clone());
        }
        s.excludes.extend(c.exclude.iter().cloned());
    }
    if let Some(t) = threshold {
        s.threshold = t;
    }
    s.validate()?;
    Ok(s)
}

fn with_lexicon<R>(s: &Settings, f: impl FnOnce(&Lexicon) -> Result<R>) -> Result<R> {
    match &s.lexicon {
        Some(p) => f(&Lexicon::load(p)?),
        None => f(Lexicon::bundled()),
    }
}

fn analysis_options(s: &Settings) -> AnalysisOptions {
    AnalysisOptions {
        discovery: DiscoveryOptions {
            excludes: s.excludes.clone(),
        },
        ordering: s.ordering.clone(),
    }
}

fn warn(err: &mut dyn Write, diagnostics: &[String]) {
    for d in diagnostics {
        let _ = writeln!(err, "warning: {d}");
    }
}

fn write(out: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    out.write_all(bytes).map_err(|e| Error::io("<stdout>", e))
}

fn analyze_one(path: &Path, s: &Settings, lexicon: &Lexicon) -> Result<Report> {
    let analysis = analyze_repository(path, &analysis_options(s), lexicon)?;
    let mut report = Report::new(
        &path.display().to_string(),
        &s.digest(),
        analysis,
        s.threshold,
    );
    report.claim = Some(scan_claims(
        path,
        ClaimOptions {
            deep: s.deep_claims,
        },
    )?);
    Ok(report)
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let cfg = cli.config.as_deref();
    match cli.command {
        Command::Analyze {
            path,
            common,
            threshold,
            fail_over,
            deep_claims,
        } => {
            let mut s = settings(cfg, Some(&common), threshold)?;
            s.deep_claims |= deep_claims;
            let report = with_lexicon(&s, |lex| analyze_one(&path, &s, lex))?;
            warn(err, &report.diagnostics);
            write(out, &emit_report(&report, common.format.into())?)?;
            if fail_over && !report.verdict.is_fully_adherent() {
                return Ok(Outcome::OverThreshold);
            }
            Ok(Outcome::Done)
        }
        Command::Evolve {
            path,
            common,
            months,
            as_of,
            min_age,
            force,
            threshold,
        } => {
            let s = settings(cfg, Some(&common), threshold)?;
            let mut opts =
                EvolveOptions::new(as_of.unwrap_or_else(|| default_as_of(Utc::now().date_naive())));
            opts.months = months.unwrap_or(s.months);
            opts.min_age_months = min_age.unwrap_or(s.min_age_months);
            opts.force = force;
            opts.analysis = analysis_options(&s);
            let evolution = with_lexicon(&s, |lex| evolve(&path, &opts, lex))?;
            for sample in &evolution.samples {
                if let Some(e) = &sample.error {
                    let _ = writeln!(err, "warning: {}: {e}", sample.month_label);
                }
            }
            let latest = evolution.samples.iter().rev().find(|x| x.error.is_none());
            let scores = latest.map(|x| x.scores.clone()).unwrap_or_default();
            let report = Report {
                tool_version: TOOL_VERSION.to_string(),
                repo_path: path.display().to_string(),
                config_digest: s.digest(),
                files_analyzed: 0,
                diagnostics: Vec::new(),
                violations: Vec::new(),
                verdict: classify_adherence(&scores, s.threshold),
                total_normalized: latest.and_then(|x| x.total_normalized).unwrap_or(0.0),
                scores,
                claim: None,
                evolution: Some(evolution),
            };
            write(out, &emit_report(&report, common.format.into())?)?;
            Ok(Outcome::Done)
        }
        Command::Claims { path, deep_claims } => {
            let s = settings(cfg, None, None)?;
            let claim = scan_claims(
                &path,
                ClaimOptions {
                    deep: deep_claims || s.deep_claims,
                },
            )?;
            write(out, &emit_json(&claim)?)?;
            Ok(Outcome::Done)
        }
        Command::Sample {
            scores_dir,
            groups,
            seed,
        } => {
            let s = settings(cfg, None, None)?;
            let repos = read_reports(&scores_dir)?;
            let sample =
                stratified_sample(&repos, groups.unwrap_or(s.groups), seed.unwrap_or(s.seed))?;
            warn(err, &sample.diagnostics);
            write(out, &emit_json(&sample)?)?;
            Ok(Outcome::Done)
        }
        Command::Corpus {
            paths_file,
            common,
            threshold,
            jobs,
        } => {
            let s = settings(cfg, Some(&common), threshold)?;
            let report = with_lexicon(&s, |lex| corpus(&paths_file, &s, lex, jobs))?;
            write(out, &emit_corpus_report(&report, common.format.into())?)?;
            Ok(Outcome::Done)
        }
    }
}

/// Saved JSON reports in `dir`, ordered by file name.
fn read_reports(dir: &Path) -> Result<Vec<RepoViolations>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            let report: Report = serde_json::from_str(&text)
                .map_err(|e| Error::Invalid(format!("{}: not a report: {e}", p.display())))?;
            Ok(RepoViolations {
                repo: report.repo_path,
                violations: report.violations,
            })
        })
        .collect()
}

/// Repository paths listed one per line; blank lines and `#` comments
/// are ignored, relative paths are taken from the list's directory.
pub fn read_paths_file(path: &Path) -> Result<Vec<PathBuf>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| base.join(l))
        .collect())
}

fn corpus(
    paths_file: &Path,
    s: &Settings,
    lexicon: &Lexicon,
    jobs: Option<usize>,
) -> Result<CorpusReport> {
    let paths = read_paths_file(paths_file)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    let results: Vec<(String, Result<Report>)> = pool.install(|| {
        paths
            .par_iter()
            .map(|p| (p.display().to_string(), analyze_one(p, s, lexicon)))
            .collect()
    });

    let mut entries = Vec::new();
    let mut per_repo = Vec::new();
    for (path, r) in results {
        match r {
            Ok(report) => {
                entries.push(CorpusEntry {
                    path,
                    total_normalized: Some(report.total_normalized),
                    verdict: Some(report.verdict),
                    claim: report.claim.map(|c| c.value),
                    error: None,
                });
                per_repo.push(report.scores);
            }
            Err(e) => entries.push(CorpusEntry {
                path,
                total_normalized: None,
                verdict: None,
                claim: None,
                error: Some(e.to_string()),
            }),
        }
    }
    let (stats, table) = if per_repo.is_empty() {
        (None, None)
    } else {
        (
            Some(aggregate(&per_repo)?),
            Some(threshold_table(&per_repo, &s.thresholds)?),
        )
    };
    Ok(CorpusReport {
        tool_version: TOOL_VERSION.to_string(),
        config_digest: s.digest(),
        claims: CorpusReport::claims_summary(&entries),
        repositories: entries,
        stats,
        threshold_table: table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("javastyle").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["analyze", ".", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(call(&["analyze", ".", "--ordering", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["analyze", ".", "--threshold", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("analyze"));
    }

    #[test]
    fn missing_repository_is_fatal() {
        let (code, _, err) = call(&["analyze", "/nonexistent/repo"]);
        assert_eq!(code, EXIT_FATAL);
        assert!(err.starts_with("error:"));
    }
}
