use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::{Category, Violation};
use crate::error::{Error, Result};

pub const DEFAULT_GROUPS: usize = 31;

/// Violations found in one repository.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepoViolations {
    pub repo: String,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledViolation {
    pub group: usize,
    pub repo: String,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StratifiedSample {
    pub group_size: usize,
    /// Contiguous ranges of repository positions, one per group.
    pub groups: Vec<(usize, usize)>,
    pub samples: BTreeMap<Category, Vec<SampledViolation>>,
    pub diagnostics: Vec<String>,
}

/// Contiguous partition of `n` items into groups of `ceil(n / groups)`.
pub fn partition(n: usize, groups: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    if groups == 0 {
        return Err(Error::Invalid("group count must be positive".into()));
    }
    if groups > n {
        return Err(Error::Invalid(format!(
            "{groups} groups requested for {n} repositories"
        )));
    }
    let size = n.div_ceil(groups);
    let ranges = (0..n)
        .step_by(size)
        .map(|s| (s, (s + size).min(n)))
        .collect();
    Ok((size, ranges))
}

/// Draws one violation per category from each group. Repositories must
/// already be in a deterministic order; each group gets its own RNG
/// stream so the draw in one group does not depend on any other.
pub fn stratified_sample(
    repos: &[RepoViolations],
    groups: usize,
    seed: u64,
) -> Result<StratifiedSample> {
    let (group_size, ranges) = partition(repos.len(), groups)?;
    let mut diagnostics = Vec::new();
    if ranges.len() < groups {
        diagnostics.push(format!(
            "{} repositories fill only {} of {groups} groups of size {group_size}",
            repos.len(),
            ranges.len()
        ));
    }

    let mut samples: BTreeMap<Category, Vec<SampledViolation>> = BTreeMap::new();
    for (g, &(start, end)) in ranges.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(g as u64);
        let mut order: Vec<usize> = (start..end).collect();
        order.shuffle(&mut rng);

        let mut firsts: BTreeMap<Category, SampledViolation> = BTreeMap::new();
        for i in order {
            let mut sorted: Vec<&Violation> = repos[i].violations.iter().collect();
            sorted.sort();
            for v in sorted {
                firsts
                    .entry(v.category)
                    .or_insert_with(|| SampledViolation {
                        group: g,
                        repo: repos[i].repo.clone(),
                        violation: v.clone(),
                    });
            }
        }
        for c in Category::ALL {
            match firsts.remove(&c) {
                Some(s) => samples.entry(c).or_default().push(s),
                None => diagnostics.push(format!("group {g}: no {c} violation")),
            }
        }
    }
    for c in Category::ALL {
        samples.entry(c).or_default();
    }
    Ok(StratifiedSample {
        group_size,
        groups: ranges,
        samples,
        diagnostics,
    })
}
