//! Violation checkers. Each function is pure over its inputs; [`run_all`]
//! fans out per file and returns violations sorted by category, file and
//! line.

pub mod javadoc;
pub mod naming;
pub mod ordering;
pub mod practices;
pub mod useless;

use rayon::prelude::*;

use crate::category::Violation;
use crate::index::ProjectIndex;
use crate::lexicon::Lexicon;
use crate::model::SourceFileModel;

pub use javadoc::{check_javadoc_formatting, check_javadoc_presence, JavadocTarget};
pub use naming::{
    check_class_names, check_method_names, check_package_names, check_variable_names,
};
pub use ordering::{check_ordering, MemberGroup, OrderingConfig};
pub use practices::{
    check_empty_catch, check_finalize_override, check_missing_override, check_private_instances,
    check_string_concatenation, check_unqualified_static,
};
pub use useless::{check_useless, is_commented_out_code};

/// Every check for the file at `file` in `models`.
pub fn check_file(
    models: &[SourceFileModel],
    file: usize,
    index: &ProjectIndex,
    lexicon: &Lexicon,
    ordering: &OrderingConfig,
) -> Vec<Violation> {
    let model = &models[file];
    let mut out = Vec::new();
    out.extend(check_class_names(model, lexicon));
    out.extend(check_method_names(model, lexicon));
    out.extend(check_variable_names(model));
    out.extend(check_package_names(model));
    out.extend(check_javadoc_formatting(model));
    for target in JavadocTarget::ALL {
        out.extend(check_javadoc_presence(model, target));
    }
    out.extend(check_private_instances(model));
    out.extend(check_useless(model));
    out.extend(check_string_concatenation(model));
    out.extend(check_missing_override(models, file, index));
    out.extend(check_empty_catch(model));
    out.extend(check_unqualified_static(models, file, index));
    out.extend(check_finalize_override(model));
    out.extend(check_ordering(model, ordering));
    out
}

/// All checks over a project, sorted by (category, file, line).
pub fn run_all(
    models: &[SourceFileModel],
    index: &ProjectIndex,
    lexicon: &Lexicon,
    ordering: &OrderingConfig,
) -> Vec<Violation> {
    let mut all: Vec<Violation> = (0..models.len())
        .into_par_iter()
        .flat_map_iter(|file| check_file(models, file, index, lexicon, ordering))
        .collect();
    all.sort();
    all
}
