use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::category::Category;
use crate::checks::javadoc::{documented_methods, public_declarations, JavadocTarget};
use crate::checks::naming::{has_package_context, variable_sites};
use crate::checks::practices::{resolved_overrides, static_accesses};
use crate::index::ProjectIndex;
use crate::model::{MemberKind, SourceFileModel};

/// Per-category denominators for one repository.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructCounts(pub BTreeMap<Category, u64>);

impl ConstructCounts {
    pub fn get(&self, category: Category) -> u64 {
        self.0.get(&category).copied().unwrap_or(0)
    }

    fn add(&mut self, category: Category, n: usize) {
        *self.0.entry(category).or_default() += n as u64;
    }

    fn merge(mut self, other: ConstructCounts) -> ConstructCounts {
        for (c, n) in other.0 {
            *self.0.entry(c).or_default() += n;
        }
        self
    }
}

/// Constructs that can carry a violation of each category.
pub fn count_constructs(models: &[SourceFileModel], index: &ProjectIndex) -> ConstructCounts {
    let mut counts = (0..models.len())
        .into_par_iter()
        .map(|file| count_file(models, file, index))
        .reduce(ConstructCounts::default, ConstructCounts::merge);
    for c in Category::ALL {
        counts.0.entry(c).or_default();
    }
    counts
}

fn count_file(models: &[SourceFileModel], file: usize, index: &ProjectIndex) -> ConstructCounts {
    use Category::*;
    let model = &models[file];
    let mut c = ConstructCounts::default();
    let members = || model.members().map(|(_, m)| m);

    c.add(
        ClassNames,
        model.types.iter().filter(|t| t.is_class_like()).count(),
    );
    c.add(
        MethodNames,
        members().filter(|m| m.kind.is_method()).count(),
    );
    c.add(VariableNames, variable_sites(model).len());
    c.add(PackageNames, usize::from(has_package_context(model)));
    c.add(JavadocFormatting, documented_methods(model).count());
    for target in JavadocTarget::ALL {
        c.add(target.category(), public_declarations(model, target).len());
    }
    c.add(
        PrivateInstances,
        members()
            .filter(|m| m.kind == MemberKind::InstanceField)
            .count(),
    );
    c.add(Useless, model.line_count);
    c.add(
        StringConcatenation,
        model.bodies().map(|(_, _, b)| b.loops.len()).sum(),
    );
    c.add(
        MissingOverride,
        resolved_overrides(models, file, index).len(),
    );
    c.add(
        EmptyCatchBlock,
        model.bodies().map(|(_, _, b)| b.catches.len()).sum(),
    );
    c.add(
        UnqualifiedStaticAccess,
        static_accesses(models, file, index).len(),
    );
    c.add(FinalizeOverride, model.types.len());
    c.add(Ordering, members().count());
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_compilation_unit;

    #[test]
    fn hand_tally() {
        let src = r#"
package org.x;
/** Doc. */
public class A {
  public int shown;
  private int hidden;
  public A(int seed) {}
  /** Run. */
  public void run(int times) {
    for (int i = 0; i < times; i++) {
      try { step(); } catch (RuntimeException e) {}
    }
    while (false) {}
  }
  private void step() {}
  static class Inner {}
}
enum B { X }
interface C { void f(); }
"#;
        let models = vec![parse_compilation_unit(src, "src/main/java/org/x/A.java").unwrap()];
        let idx = ProjectIndex::build(&models);
        let c = count_constructs(&models, &idx);
        use Category::*;
        let expected = [
            (ClassNames, 3),
            (MethodNames, 3),
            // shown, hidden, seed, times, i, e
            (VariableNames, 6),
            (PackageNames, 1),
            (JavadocFormatting, 1),
            (JavadocClass, 1),
            (JavadocConstructor, 1),
            (JavadocMethod, 2),
            (JavadocField, 1),
            (PrivateInstances, 2),
            (Useless, 18),
            (StringConcatenation, 2),
            (MissingOverride, 0),
            (EmptyCatchBlock, 1),
            (UnqualifiedStaticAccess, 0),
            (FinalizeOverride, 4),
            (Ordering, 7),
        ];
        for (cat, n) in expected {
            assert_eq!(c.get(cat), n, "{cat}");
        }
        assert_eq!(c.0.len(), 17);
    }
}
