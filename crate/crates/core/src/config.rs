//! Settings file. A TOML document of `key = value` pairs, every key
//! optional:
//!
//! ```toml
//! threshold = 0.05
//! ordering = 2                   # or a list of the six member groups
//! lexicon = "words.tsv"          # relative to the config file
//! excludes = ["generated", "src/legacy"]
//! thresholds = [0.25, 0.1, 0.05, 0.0]
//! months = 12
//! min_age_months = 36
//! groups = 31
//! seed = 0
//! deep_claims = false
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::checks::{MemberGroup, OrderingConfig};
use crate::error::{Error, Result};
use crate::history::{DEFAULT_MIN_AGE_MONTHS, DEFAULT_MONTHS};
use crate::scoring::sample::DEFAULT_GROUPS;
use crate::scoring::{DEFAULT_THRESHOLD, DEFAULT_THRESHOLDS};

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "JAVASTYLE_CONFIG";

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum OrderingSetting {
    Builtin(u8),
    Custom([MemberGroup; 6]),
}

/// Contents of a config file.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub threshold: Option<f64>,
    pub ordering: Option<OrderingSetting>,
    pub lexicon: Option<PathBuf>,
    pub excludes: Option<Vec<String>>,
    pub thresholds: Option<Vec<f64>>,
    pub months: Option<usize>,
    pub min_age_months: Option<u32>,
    pub groups: Option<usize>,
    pub seed: Option<u64>,
    pub deep_claims: Option<bool>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &Path) -> Result<ConfigFile> {
        let mut cfg: ConfigFile = toml::from_str(text).map_err(|e| Error::Config {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })?;
        if let (Some(lex), Some(dir)) = (&cfg.lexicon, path.parent()) {
            if lex.is_relative() {
                cfg.lexicon = Some(dir.join(lex));
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<ConfigFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        ConfigFile::parse(&text, path)
    }

    /// The file named by `explicit`, else by [`CONFIG_ENV`], else none.
    pub fn discover(explicit: Option<&Path>) -> Result<ConfigFile> {
        match explicit {
            Some(p) => ConfigFile::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => ConfigFile::load(Path::new(&p)),
                _ => Ok(ConfigFile::default()),
            },
        }
    }
}

/// Effective settings after defaults, file and command line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Settings {
    pub threshold: f64,
    pub ordering: OrderingConfig,
    pub lexicon: Option<PathBuf>,
    pub excludes: Vec<String>,
    pub thresholds: Vec<f64>,
    pub months: usize,
    pub min_age_months: u32,
    pub groups: usize,
    pub seed: u64,
    pub deep_claims: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            threshold: DEFAULT_THRESHOLD,
            ordering: OrderingConfig::default(),
            lexicon: None,
            excludes: Vec::new(),
            thresholds: DEFAULT_THRESHOLDS.to_vec(),
            months: DEFAULT_MONTHS,
            min_age_months: DEFAULT_MIN_AGE_MONTHS,
            groups: DEFAULT_GROUPS,
            seed: 0,
            deep_claims: false,
        }
    }
}

fn ordering_from(id: u8) -> Result<OrderingConfig> {
    OrderingConfig::builtin(id)
        .ok_or_else(|| Error::Invalid(format!("unknown ordering {id}, expected 1 to 4")))
}

impl Settings {
    /// Defaults overlaid with `file`.
    pub fn from_file(file: &ConfigFile) -> Result<Settings> {
        let mut s = Settings::default();
        if let Some(t) = file.threshold {
            s.threshold = t;
        }
        match &file.ordering {
            Some(OrderingSetting::Builtin(id)) => s.ordering = ordering_from(*id)?,
            Some(OrderingSetting::Custom(groups)) => s.ordering = OrderingConfig::custom(*groups)?,
            None => {}
        }
        s.lexicon = file.lexicon.clone();
        if let Some(e) = &file.excludes {
            s.excludes = e.clone();
        }
        if let Some(t) = &file.thresholds {
            s.thresholds = t.clone();
        }
        s.months = file.months.unwrap_or(s.months);
        s.min_age_months = file.min_age_months.unwrap_or(s.min_age_months);
        s.groups = file.groups.unwrap_or(s.groups);
        s.seed = file.seed.unwrap_or(s.seed);
        s.deep_claims = file.deep_claims.unwrap_or(s.deep_claims);
        s.validate()?;
        Ok(s)
    }

    pub fn set_ordering(&mut self, id: u8) -> Result<()> {
        self.ordering = ordering_from(id)?;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |t: f64| !(0.0..=1.0).contains(&t);
        if bad(self.threshold) || self.thresholds.iter().any(|t| bad(*t)) {
            return Err(Error::Invalid("thresholds must lie in [0, 1]".into()));
        }
        if self.months == 0 || self.groups == 0 {
            return Err(Error::Invalid("months and groups must be positive".into()));
        }
        Ok(())
    }

    /// SHA-256 of the settings that affect analysis results.
    pub fn digest(&self) -> String {
        let canonical = serde_json::json!({
            "threshold": format!("{:.4}", self.threshold),
            "ordering": self.ordering.ranked_groups,
            "lexicon": self.lexicon.as_ref().map(|p| p.display().to_string()),
            "excludes": self.excludes,
        });
        hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let f = ConfigFile::parse(
            "threshold = 0.1\nordering = 3\nexcludes = [\"gen\"]\nlexicon = \"w.tsv\"\n",
            Path::new("/cfg/x.toml"),
        )
        .unwrap();
        let s = Settings::from_file(&f).unwrap();
        assert_eq!(s.threshold, 0.1);
        assert_eq!(s.ordering.id, Some(3));
        assert_eq!(s.excludes, ["gen"]);
        assert_eq!(s.lexicon.as_deref(), Some(Path::new("/cfg/w.tsv")));
        assert_eq!(s.months, 12);
    }

    #[test]
    fn custom_ordering() {
        let f = ConfigFile::parse(
            "ordering = [\"constructors\", \"instanceFields\", \"instanceMethods\", \"staticFields\", \"staticMethods\", \"innerTypes\"]",
            Path::new("c.toml"),
        )
        .unwrap();
        let s = Settings::from_file(&f).unwrap();
        assert_eq!(s.ordering.id, None);
        assert_eq!(s.ordering.ranked_groups[0], MemberGroup::Constructors);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ConfigFile::parse("colour = 1", Path::new("c.toml")).is_err());
        assert!(ConfigFile::parse("threshold = ", Path::new("c.toml")).is_err());
        let f = ConfigFile::parse("ordering = 9", Path::new("c.toml")).unwrap();
        assert!(Settings::from_file(&f).is_err());
        let f = ConfigFile::parse("threshold = 2.0", Path::new("c.toml")).unwrap();
        assert!(Settings::from_file(&f).is_err());
    }

    #[test]
    fn digest_tracks_results_relevant_settings() {
        let a = Settings::default();
        let mut b = a.clone();
        b.seed = 99;
        assert_eq!(a.digest(), b.digest());
        b.set_ordering(4).unwrap();
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
