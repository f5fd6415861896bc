use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::category::{Category, Group, Violation};
use crate::error::{Error, Result};
use crate::scoring::counts::ConstructCounts;

/// Default adherence cutoff on normalized scores.
pub const DEFAULT_THRESHOLD: f64 = 0.05;

/// Threshold columns of the adherence table, descending.
pub const DEFAULT_THRESHOLDS: [f64; 10] =
    [0.25, 0.20, 0.15, 0.10, 0.05, 0.04, 0.03, 0.02, 0.01, 0.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CategoryScore {
    pub category: Category,
    pub absolute: u64,
    pub denominator: u64,
    /// `None` when violations exist but no construct was counted.
    #[serde(serialize_with = "crate::fixed::option::serialize")]
    pub normalized: Option<f64>,
}

impl CategoryScore {
    pub fn is_undefined(&self) -> bool {
        self.normalized.is_none()
    }
}

/// One score per category, in [`Category::ALL`] order.
pub fn normalize(violations: &[Violation], counts: &ConstructCounts) -> Vec<CategoryScore> {
    let mut absolute: BTreeMap<Category, u64> = BTreeMap::new();
    for v in violations {
        *absolute.entry(v.category).or_default() += 1;
    }
    Category::ALL
        .into_iter()
        .map(|category| {
            let absolute = absolute.get(&category).copied().unwrap_or(0);
            let denominator = counts.get(category);
            let normalized = match (absolute, denominator) {
                (0, _) => Some(0.0),
                (_, 0) => None,
                (a, d) => Some(a as f64 / d as f64),
            };
            CategoryScore {
                category,
                absolute,
                denominator,
                normalized,
            }
        })
        .collect()
}

/// Diagnostics for scores whose denominator is zero despite violations.
pub fn undefined_diagnostics(scores: &[CategoryScore]) -> Vec<String> {
    scores
        .iter()
        .filter(|s| s.is_undefined())
        .map(|s| {
            format!(
                "{}: {} violations but no counted constructs",
                s.category, s.absolute
            )
        })
        .collect()
}

/// Mean normalized score over the sixteen scored categories, with
/// Javadoc formatting capped at 1. Undefined scores are left out.
pub fn total_normalized(scores: &[CategoryScore]) -> f64 {
    let values: Vec<f64> = scores
        .iter()
        .filter(|s| s.category.group().is_some())
        .filter_map(|s| {
            s.normalized.map(|v| {
                if s.category == Category::JavadocFormatting {
                    v.min(1.0)
                } else {
                    v
                }
            })
        })
        .collect();
    if values.is_empty() {
        0.0
    } else {
        values.iter().sum::<f64>() / values.len() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    #[serde(serialize_with = "crate::fixed::serialize")]
    pub min: f64,
    #[serde(serialize_with = "crate::fixed::serialize")]
    pub max: f64,
    #[serde(serialize_with = "crate::fixed::serialize")]
    pub mean: f64,
    #[serde(serialize_with = "crate::fixed::serialize")]
    pub median: f64,
}

impl Stats {
    /// Order statistics; the median of an even count is the mean of the
    /// two middle values.
    pub fn of(values: &[f64]) -> Result<Stats> {
        if values.is_empty() {
            return Err(Error::Invalid("statistics of an empty set".into()));
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
        };
        Ok(Stats {
            min: sorted[0],
            max: sorted[n - 1],
            mean: sorted.iter().sum::<f64>() / n as f64,
            median,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CategoryStats {
    pub category: Category,
    pub absolute: Stats,
    /// Over repositories with a defined normalized score.
    pub normalized: Option<Stats>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub repositories: usize,
    pub categories: Vec<CategoryStats>,
}

fn score_of(scores: &[CategoryScore], category: Category) -> Option<&CategoryScore> {
    scores.iter().find(|s| s.category == category)
}

pub fn aggregate(per_repo: &[Vec<CategoryScore>]) -> Result<CorpusStats> {
    if per_repo.is_empty() {
        return Err(Error::Invalid("no repositories to aggregate".into()));
    }
    let mut categories = Vec::new();
    for category in Category::ALL {
        let scores: Vec<&CategoryScore> = per_repo
            .iter()
            .filter_map(|r| score_of(r, category))
            .collect();
        if scores.is_empty() {
            continue;
        }
        let absolute: Vec<f64> = scores.iter().map(|s| s.absolute as f64).collect();
        let normalized: Vec<f64> = scores.iter().filter_map(|s| s.normalized).collect();
        categories.push(CategoryStats {
            category,
            absolute: Stats::of(&absolute)?,
            normalized: Stats::of(&normalized).ok(),
        });
    }
    Ok(CorpusStats {
        repositories: per_repo.len(),
        categories,
    })
}

/// Whether a normalized value counts as below threshold `t`. At `t = 0`
/// only an exact zero qualifies.
pub fn below(value: Option<f64>, t: f64) -> bool {
    match value {
        None => false,
        Some(v) if t <= 0.0 => v <= 0.0,
        Some(v) => v < t,
    }
}

/// Percentage of `values` below `t`.
pub fn percent_below(values: &[Option<f64>], t: f64) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let n = values.iter().filter(|v| below(**v, t)).count();
    100.0 * n as f64 / values.len() as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdTable {
    #[serde(serialize_with = "crate::fixed::vec::serialize")]
    pub thresholds: Vec<f64>,
    pub rows: Vec<ThresholdRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub category: Category,
    /// Percent of repositories below each threshold, in threshold order.
    #[serde(serialize_with = "crate::fixed::vec::serialize")]
    pub percentages: Vec<f64>,
}

/// Share of repositories below each threshold for the categories that
/// decide adherence.
pub fn threshold_table(
    per_repo: &[Vec<CategoryScore>],
    thresholds: &[f64],
) -> Result<ThresholdTable> {
    if per_repo.is_empty() {
        return Err(Error::Invalid("no repositories for threshold table".into()));
    }
    let rows = Category::ALL
        .into_iter()
        .filter(|c| c.decides_adherence())
        .map(|category| {
            let values: Vec<Option<f64>> = per_repo
                .iter()
                .map(|r| score_of(r, category).and_then(|s| s.normalized))
                .collect();
            let percentages = thresholds
                .iter()
                .map(|t| percent_below(&values, *t))
                .collect();
            ThresholdRow {
                category,
                percentages,
            }
        })
        .collect();
    Ok(ThresholdTable {
        thresholds: thresholds.to_vec(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AdherenceVerdict {
    #[serde(serialize_with = "crate::fixed::serialize")]
    pub threshold: f64,
    pub categories: Vec<CategoryVerdict>,
    pub code_style: bool,
    pub programming_practices: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryVerdict {
    pub category: Category,
    pub adherent: bool,
}

impl AdherenceVerdict {
    pub fn is_adherent(&self, category: Category) -> Option<bool> {
        self.categories
            .iter()
            .find(|v| v.category == category)
            .map(|v| v.adherent)
    }

    pub fn is_fully_adherent(&self) -> bool {
        self.code_style && self.programming_practices
    }
}

/// Adherence per scored category at threshold `t`. A group is adherent
/// when each of its categories that decides adherence is.
pub fn classify_adherence(scores: &[CategoryScore], t: f64) -> AdherenceVerdict {
    let categories: Vec<CategoryVerdict> = scores
        .iter()
        .filter(|s| s.category.group().is_some())
        .map(|s| CategoryVerdict {
            category: s.category,
            adherent: below(s.normalized, t),
        })
        .collect();
    let group_ok = |g: Group| {
        categories
            .iter()
            .filter(|v| v.category.group() == Some(g) && v.category.decides_adherence())
            .all(|v| v.adherent)
    };
    AdherenceVerdict {
        threshold: t,
        code_style: group_ok(Group::CodeStyle),
        programming_practices: group_ok(Group::ProgrammingPractices),
        categories,
    }
}
