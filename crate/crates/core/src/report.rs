//! Report assembly and rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::category::{Category, Violation};
use crate::claims::{ClaimCategory, ClaimKind};
use crate::error::{Error, Result};
use crate::fixed;
use crate::history::Evolution;
use crate::scoring::{
    classify_adherence, AdherenceVerdict, CategoryScore, CorpusStats, ThresholdTable,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Violations listed individually in Markdown output.
pub const MARKDOWN_VIOLATION_LIMIT: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Invalid(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool_version: String,
    pub repo_path: String,
    pub config_digest: String,
    pub files_analyzed: usize,
    pub diagnostics: Vec<String>,
    pub violations: Vec<Violation>,
    pub scores: Vec<CategoryScore>,
    #[serde(serialize_with = "fixed::serialize")]
    pub total_normalized: f64,
    pub verdict: AdherenceVerdict,
    pub claim: Option<ClaimCategory>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub evolution: Option<Evolution>,
}

impl Report {
    pub fn new(repo_path: &str, config_digest: &str, analysis: Analysis, threshold: f64) -> Report {
        Report {
            tool_version: TOOL_VERSION.to_string(),
            repo_path: repo_path.to_string(),
            config_digest: config_digest.to_string(),
            files_analyzed: analysis.files.len(),
            diagnostics: analysis.diagnostics,
            verdict: classify_adherence(&analysis.scores, threshold),
            violations: analysis.violations,
            total_normalized: analysis.total_normalized,
            scores: analysis.scores,
            claim: None,
            evolution: None,
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), fixed::format)
}

fn group_label(c: Category) -> &'static str {
    match c.group() {
        Some(crate::category::Group::CodeStyle) => "code style",
        Some(crate::category::Group::ProgrammingPractices) => "programming practices",
        None => "ordering",
    }
}

/// `path:line` link for a violation.
pub fn anchor(v: &Violation) -> String {
    format!("[{}:{}]({}#L{})", v.file_path, v.line, v.file_path, v.line)
}

fn markdown_scores(out: &mut String, scores: &[CategoryScore], verdict: &AdherenceVerdict) {
    out.push_str("| Category | Group | Violations | Constructs | Normalized | Adherent |\n");
    out.push_str("|---|---|---:|---:|---:|---|\n");
    for s in scores {
        let adherent = match verdict.is_adherent(s.category) {
            Some(true) => "yes",
            Some(false) => "no",
            None => "",
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            s.category.label(),
            group_label(s.category),
            s.absolute,
            s.denominator,
            opt(s.normalized),
            adherent
        );
    }
}

fn markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Style report for `{}`\n", report.repo_path);
    let _ = writeln!(out, "- Files analyzed: {}", report.files_analyzed);
    let _ = writeln!(
        out,
        "- Total normalized score: {}",
        fixed::format(report.total_normalized)
    );
    let yes_no = |b: bool| if b { "adherent" } else { "not adherent" };
    let _ = writeln!(
        out,
        "- At threshold {}: code style {}, programming practices {}",
        fixed::format(report.verdict.threshold),
        yes_no(report.verdict.code_style),
        yes_no(report.verdict.programming_practices)
    );
    if let Some(c) = &report.claim {
        let _ = writeln!(out, "- Documented style claim: {:?}", c.value);
    }
    let _ = writeln!(out, "- Configuration digest: `{}`\n", report.config_digest);

    out.push_str("## Scores\n\n");
    markdown_scores(&mut out, &report.scores, &report.verdict);

    if !report.violations.is_empty() {
        out.push_str("\n## Violations\n\n");
        for v in report.violations.iter().take(MARKDOWN_VIOLATION_LIMIT) {
            let detail = v
                .detail
                .as_deref()
                .map(|d| format!(" (`{d}`)"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "- {} {}: {}{}",
                anchor(v),
                v.category.label(),
                v.message,
                detail
            );
        }
        if report.violations.len() > MARKDOWN_VIOLATION_LIMIT {
            let _ = writeln!(
                out,
                "\n{} more not shown.",
                report.violations.len() - MARKDOWN_VIOLATION_LIMIT
            );
        }
    }

    if let Some(e) = &report.evolution {
        out.push_str("\n## Evolution\n\n");
        markdown_evolution(&mut out, e);
    }

    if !report.diagnostics.is_empty() {
        out.push_str("\n## Diagnostics\n\n");
        for d in &report.diagnostics {
            let _ = writeln!(out, "- {d}");
        }
    }
    out
}

fn markdown_evolution(out: &mut String, e: &Evolution) {
    if !e.eligibility.eligible {
        let _ = writeln!(out, "Not eligible: {}\n", e.eligibility.reasons.join("; "));
    }
    out.push_str("| Month | Commit | Total normalized | Note |\n|---|---|---:|---|\n");
    for s in &e.samples {
        let commit = s
            .commit
            .as_ref()
            .map(|c| c.id.chars().take(10).collect::<String>())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            s.month_label,
            commit,
            opt(s.total_normalized),
            s.error.as_deref().unwrap_or("")
        );
    }
    if let Some(gap) = e.spacing.min_gap_days {
        let _ = writeln!(out, "\nMinimum gap between selected commits: {gap} days.");
    }
}

fn csv_bytes(header: &[&str], rows: Vec<Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    w.into_inner()
        .map_err(|e| Error::Invalid(format!("csv: {e}")))
}

fn score_row(s: &CategoryScore) -> Vec<String> {
    vec![
        s.category.id().to_string(),
        s.absolute.to_string(),
        s.denominator.to_string(),
        s.normalized.map(fixed::format).unwrap_or_default(),
    ]
}

fn csv(report: &Report) -> Result<Vec<u8>> {
    if let Some(e) = &report.evolution {
        let mut rows = Vec::new();
        for s in &e.samples {
            let commit = s.commit.as_ref().map(|c| c.id.clone()).unwrap_or_default();
            for score in &s.scores {
                let mut r = vec![s.month_label.clone(), commit.clone()];
                r.extend(score_row(score));
                rows.push(r);
            }
        }
        return csv_bytes(
            &[
                "month",
                "commit",
                "category",
                "absolute",
                "denominator",
                "normalized",
            ],
            rows,
        );
    }
    let rows = report
        .scores
        .iter()
        .map(|s| {
            let mut r = score_row(s);
            r.push(
                report
                    .verdict
                    .is_adherent(s.category)
                    .map(|a| a.to_string())
                    .unwrap_or_default(),
            );
            r
        })
        .collect();
    csv_bytes(
        &[
            "category",
            "absolute",
            "denominator",
            "normalized",
            "adherent",
        ],
        rows,
    )
}

pub fn emit_report(report: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => json(report),
        Format::Markdown => Ok(markdown(report).into_bytes()),
        Format::Csv => csv(report),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusEntry {
    pub path: String,
    #[serde(serialize_with = "fixed::option::serialize")]
    pub total_normalized: Option<f64>,
    pub verdict: Option<AdherenceVerdict>,
    pub claim: Option<ClaimKind>,
    pub error: Option<String>,
}

/// Adherence counts for repositories sharing a claim category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimAdherence {
    pub claim: ClaimKind,
    pub repositories: usize,
    pub code_style_adherent: usize,
    pub programming_practices_adherent: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub tool_version: String,
    pub config_digest: String,
    pub repositories: Vec<CorpusEntry>,
    pub stats: Option<CorpusStats>,
    pub threshold_table: Option<ThresholdTable>,
    pub claims: Vec<ClaimAdherence>,
}

impl CorpusReport {
    pub fn claims_summary(entries: &[CorpusEntry]) -> Vec<ClaimAdherence> {
        [
            ClaimKind::NoMention,
            ClaimKind::MentionCodeStyle,
            ClaimKind::GoogleExplicit,
        ]
        .into_iter()
        .map(|claim| {
            let of: Vec<&AdherenceVerdict> = entries
                .iter()
                .filter(|e| e.claim == Some(claim))
                .filter_map(|e| e.verdict.as_ref())
                .collect();
            ClaimAdherence {
                claim,
                repositories: of.len(),
                code_style_adherent: of.iter().filter(|v| v.code_style).count(),
                programming_practices_adherent: of
                    .iter()
                    .filter(|v| v.programming_practices)
                    .count(),
            }
        })
        .collect()
    }
}

fn corpus_markdown(r: &CorpusReport) -> String {
    let mut out = String::from("# Corpus report\n\n| Repository | Total normalized | Code style | Practices | Claim |\n|---|---:|---|---|---|\n");
    for e in &r.repositories {
        let (cs, pp) = match &e.verdict {
            Some(v) => (
                v.code_style.to_string(),
                v.programming_practices.to_string(),
            ),
            None => (String::new(), String::new()),
        };
        let claim = e.claim.map(|c| format!("{c:?}")).unwrap_or_default();
        let total = e.error.clone().unwrap_or_else(|| opt(e.total_normalized));
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            e.path, total, cs, pp, claim
        );
    }
    if let Some(stats) = &r.stats {
        out.push_str("\n## Normalized scores across repositories\n\n| Category | Min | Max | Mean | Median |\n|---|---:|---:|---:|---:|\n");
        for c in &stats.categories {
            if let Some(n) = &c.normalized {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    c.category.label(),
                    fixed::format(n.min),
                    fixed::format(n.max),
                    fixed::format(n.mean),
                    fixed::format(n.median)
                );
            }
        }
    }
    if let Some(t) = &r.threshold_table {
        out.push_str("\n## Percent of repositories below each threshold\n\n| Category |");
        for th in &t.thresholds {
            let _ = write!(out, " {} |", fixed::format(*th));
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(t.thresholds.len()));
        out.push('\n');
        for row in &t.rows {
            let _ = write!(out, "| {} |", row.category.label());
            for p in &row.percentages {
                let _ = write!(out, " {:.2} |", p);
            }
            out.push('\n');
        }
    }
    out.push_str("\n## Claims and adherence\n\n| Claim | Repositories | Code style adherent | Practices adherent |\n|---|---:|---:|---:|\n");
    for c in &r.claims {
        let _ = writeln!(
            out,
            "| {:?} | {} | {} | {} |",
            c.claim, c.repositories, c.code_style_adherent, c.programming_practices_adherent
        );
    }
    out
}

pub fn emit_corpus_report(report: &CorpusReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => json(report),
        Format::Markdown => Ok(corpus_markdown(report).into_bytes()),
        Format::Csv => {
            let mut header = vec!["category".to_string()];
            let mut rows = Vec::new();
            if let Some(t) = &report.threshold_table {
                header.extend(
                    t.thresholds
                        .iter()
                        .map(|t| format!("below_{}", fixed::format(*t))),
                );
                for row in &t.rows {
                    let mut r = vec![row.category.id().to_string()];
                    r.extend(row.percentages.iter().map(|p| fixed::format(*p)));
                    rows.push(r);
                }
            }
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_bytes(&header, rows)
        }
    }
}

pub fn emit_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    json(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze_models;
    use crate::checks::OrderingConfig;
    use crate::lexicon::Lexicon;
    use crate::parse::parse_compilation_unit;

    fn report(src: &str) -> Report {
        let models = vec![parse_compilation_unit(src, "src/main/java/a/A.java").unwrap()];
        let a = analyze_models(&models, Lexicon::bundled(), &OrderingConfig::default());
        Report::new("repo", "digest", a, 0.05)
    }

    #[test]
    fn empty_report_has_zero_absolutes() {
        let r = report("package a;\n");
        let text = String::from_utf8(emit_report(&r, Format::Json).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["scores"]
            .as_array()
            .unwrap()
            .iter()
            .all(|s| s["absolute"] == 0));
        assert_eq!(v["scores"].as_array().unwrap().len(), 17);
        assert!(text.contains("\"normalized\": 0.0000"));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.scores, r.scores);
    }

    #[test]
    fn one_violation_one_anchor() {
        let r = report("package a;\nclass Parser {\n  void f() {\n    try { f(); } catch (RuntimeException e) {}\n  }\n}\n");
        assert_eq!(r.violations.len(), 1, "{:?}", r.violations);
        let md = String::from_utf8(emit_report(&r, Format::Markdown).unwrap()).unwrap();
        assert_eq!(md.matches("src/main/java/a/A.java:4").count(), 1);
    }

    #[test]
    fn deterministic_bytes() {
        let src = "package a;\npublic class A { int X; void Run() {} }\n";
        for f in [Format::Json, Format::Markdown, Format::Csv] {
            assert_eq!(
                emit_report(&report(src), f).unwrap(),
                emit_report(&report(src), f).unwrap()
            );
        }
        let csv = String::from_utf8(emit_report(&report(src), Format::Csv).unwrap()).unwrap();
        assert_eq!(csv.lines().count(), 18);
        assert!("xml".parse::<Format>().is_err());
    }
}
