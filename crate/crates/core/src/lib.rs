//! Java style and best-practice analysis.
//!
//! Sources are parsed into [`model::SourceFileModel`]s, indexed across files
//! by [`index::ProjectIndex`], checked by [`checks`], and scored by
//! [`scoring`]. [`analysis::analyze_repository`] runs the whole pipeline for
//! one tree; [`history::evolve`] repeats it over monthly commits.

pub mod analysis;
pub mod category;
pub mod checks;
pub mod claims;
pub mod cli;
pub mod config;
pub mod discover;
pub mod error;
mod fixed;
pub mod history;
pub mod index;
pub mod javadoc;
pub mod lexicon;
pub mod model;
pub mod parse;
pub mod report;
pub mod scoring;
