pub mod counts;
pub mod sample;
pub mod stats;

pub use counts::{count_constructs, ConstructCounts};
pub use sample::{stratified_sample, RepoViolations, StratifiedSample};
pub use stats::{
    aggregate, classify_adherence, normalize, percent_below, threshold_table, total_normalized,
    AdherenceVerdict, CategoryScore, CategoryVerdict, CorpusStats, Stats, ThresholdRow,
    ThresholdTable, DEFAULT_THRESHOLD, DEFAULT_THRESHOLDS,
};
