use crate::category::{Category, Violation};
use crate::index::ProjectIndex;
use crate::model::{MemberKind, SourceFileModel, Visibility};

pub fn check_private_instances(model: &SourceFileModel) -> Vec<Violation> {
    model
        .members()
        .filter(|(_, m)| m.kind == MemberKind::InstanceField)
        .filter(|(_, m)| matches!(m.visibility, Visibility::Public | Visibility::Package))
        .map(|(_, m)| {
            let vis = if m.visibility == Visibility::Public {
                "public"
            } else {
                "package-private"
            };
            Violation::new(
                Category::PrivateInstances,
                &model.path,
                m.line,
                format!("instance field is {vis}; make it private or protected"),
            )
            .with_detail(&m.name)
        })
        .collect()
}

pub fn check_string_concatenation(model: &SourceFileModel) -> Vec<Violation> {
    model
        .bodies()
        .flat_map(|(_, _, b)| b.string_concat_sites.iter())
        .filter(|s| s.target_type_name.as_deref() == Some("String"))
        .map(|s| {
            Violation::new(
                Category::StringConcatenation,
                &model.path,
                s.line,
                "string concatenated inside a loop; use a StringBuilder",
            )
            .with_detail(&s.target_var_name)
        })
        .collect()
}

pub fn check_empty_catch(model: &SourceFileModel) -> Vec<Violation> {
    model
        .bodies()
        .flat_map(|(_, _, b)| b.catches.iter())
        .filter(|c| c.is_body_empty && !c.has_comment)
        .filter(|c| !(c.enclosing_method_is_test && c.exception_var_name.starts_with("expected")))
        .map(|c| {
            Violation::new(
                Category::EmptyCatchBlock,
                &model.path,
                c.line,
                "empty catch block without a comment",
            )
            .with_detail(&c.exception_var_name)
        })
        .collect()
}

pub fn is_finalize_override(m: &crate::model::MemberFact) -> bool {
    m.kind.is_method() && m.name == "finalize" && m.params.is_empty() && m.is_void()
}

pub fn check_finalize_override(model: &SourceFileModel) -> Vec<Violation> {
    model
        .members()
        .filter(|(_, m)| is_finalize_override(m))
        .map(|(t, m)| {
            Violation::new(
                Category::FinalizeOverride,
                &model.path,
                m.line,
                "finalize() is overridden",
            )
            .with_detail(&t.name)
        })
        .collect()
}

/// Instance methods whose override status is known: `(type index, member,
/// has deprecated parent)`.
pub fn resolved_overrides<'a>(
    models: &'a [SourceFileModel],
    file: usize,
    index: &ProjectIndex,
) -> Vec<(usize, &'a crate::model::MemberFact, bool)> {
    let mut out = Vec::new();
    for (ti, ty) in models[file].types.iter().enumerate() {
        for m in ty
            .members
            .iter()
            .filter(|m| m.kind == MemberKind::InstanceMethod)
        {
            let r = index.resolve_override(file, ti, m);
            if r.overrides && r.parent_resolved {
                out.push((ti, m, r.parent_deprecated));
            }
        }
    }
    out
}

pub fn check_missing_override(
    models: &[SourceFileModel],
    file: usize,
    index: &ProjectIndex,
) -> Vec<Violation> {
    let path = &models[file].path;
    resolved_overrides(models, file, index)
        .into_iter()
        .filter(|(_, m, deprecated)| !deprecated && !m.has_annotation("Override"))
        .map(|(_, m, _)| {
            Violation::new(
                Category::MissingOverride,
                path,
                m.line,
                "overriding method lacks @Override",
            )
            .with_detail(&m.name)
        })
        .collect()
}

/// Accesses to resolved static members: `(line, member, qualified)`.
pub fn static_accesses<'a>(
    models: &'a [SourceFileModel],
    file: usize,
    index: &ProjectIndex,
) -> Vec<(usize, &'a str, bool)> {
    let mut out = Vec::new();
    for (ti, ty) in models[file].types.iter().enumerate() {
        let bodies = ty
            .members
            .iter()
            .filter_map(|m| m.body.as_ref())
            .chain(ty.initializers.iter());
        for body in bodies {
            for a in &body.member_accesses {
                let r = index.resolve_static_access(models, file, ti, a);
                if r.resolved && r.is_static_member {
                    out.push((a.line, a.member_name.as_str(), r.qualified_correctly));
                }
            }
        }
    }
    out
}

pub fn check_unqualified_static(
    models: &[SourceFileModel],
    file: usize,
    index: &ProjectIndex,
) -> Vec<Violation> {
    let path = &models[file].path;
    static_accesses(models, file, index)
        .into_iter()
        .filter(|(_, _, qualified)| !qualified)
        .map(|(line, name, _)| {
            Violation::new(
                Category::UnqualifiedStaticAccess,
                path,
                line,
                "static member accessed through an instance; use the class name",
            )
            .with_detail(name)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_compilation_unit;

    fn model(src: &str) -> SourceFileModel {
        parse_compilation_unit(src, "A.java").unwrap()
    }

    fn project(files: &[(&str, &str)]) -> (Vec<SourceFileModel>, ProjectIndex) {
        let models: Vec<_> = files
            .iter()
            .map(|(p, s)| parse_compilation_unit(s, p).unwrap())
            .collect();
        let index = ProjectIndex::build(&models);
        (models, index)
    }

    #[test]
    fn private_instances() {
        let m = model("class A { public int count; protected int ok; private int fine; int pkg; public static final int MAX = 1; }");
        let v = check_private_instances(&m);
        let names: Vec<_> = v.iter().map(|v| v.detail.as_deref().unwrap()).collect();
        assert_eq!(names, ["count", "pkg"]);
    }

    #[test]
    fn string_concatenation_listings() {
        let bad = model(
            r#"class A { String f() { String result = ""; for (int i = 0; i < 50000; i++) { result += i + " "; } return result; } }"#,
        );
        assert_eq!(check_string_concatenation(&bad).len(), 1);
        let good = model(
            r#"class A { String f() { StringBuilder sb = new StringBuilder(); for (int i = 0; i < 50000; i++) { sb.append(i).append(" "); } return sb.toString(); } }"#,
        );
        assert!(check_string_concatenation(&good).is_empty());
        let outside = model(r#"class A { String f(String s, String x) { s += x; return s; } }"#);
        assert!(check_string_concatenation(&outside).is_empty());
        let numeric = model(
            "class A { int f() { int n = 0; for (int i = 0; i < 3; i++) { n += i; } return n; } }",
        );
        assert!(check_string_concatenation(&numeric).is_empty());
    }

    #[test]
    fn empty_catch_rules() {
        let src = r#"
class StackTest {
  @Test void pops() { try { s.pop(); fail(); } catch (NoSuchElementException expected) {} }
  void parse(String input) {
    try { Integer.parseInt(input); } catch (NumberFormatException ok) {
      // Non-numeric input is expected; continue normally
    }
  }
  void prod() { try { x(); } catch (Exception e) {} }
  void prodExpected() { try { x(); } catch (Exception expected) {} }
}"#;
        let v = check_empty_catch(&model(src));
        let names: Vec<_> = v.iter().map(|v| v.detail.as_deref().unwrap()).collect();
        assert_eq!(names, ["e", "expected"]);
    }

    #[test]
    fn finalize_override() {
        assert_eq!(
            check_finalize_override(&model("class A { protected void finalize() {} }")).len(),
            1
        );
        assert!(
            check_finalize_override(&model("class A { void finalize(int mode) {} }")).is_empty()
        );
        assert!(check_finalize_override(&model("class A {}")).is_empty());
    }

    #[test]
    fn missing_override_across_files() {
        let (m, idx) = project(&[
            ("A.java", "class A { void work() {} }"),
            ("B.java", "class B extends A { void work() {} }"),
        ]);
        assert!(check_missing_override(&m, 0, &idx).is_empty());
        assert_eq!(check_missing_override(&m, 1, &idx).len(), 1);

        let (m, idx) = project(&[
            ("A.java", "class A { void work() {} }"),
            ("B.java", "class B extends A { @Override void work() {} }"),
        ]);
        assert!(check_missing_override(&m, 1, &idx).is_empty());

        let (m, idx) = project(&[
            ("A.java", "class A { @Deprecated void work() {} }"),
            ("B.java", "class B extends A { void work() {} }"),
        ]);
        assert!(check_missing_override(&m, 1, &idx).is_empty());
        assert_eq!(resolved_overrides(&m, 1, &idx).len(), 1);

        let (m, idx) = project(&[(
            "C.java",
            "class C implements Runnable { public void run() {} }",
        )]);
        assert!(check_missing_override(&m, 0, &idx).is_empty());
    }

    #[test]
    fn unqualified_static_access() {
        let src = r#"
class Utils { static void doWork() {} }
class Client {
  Utils utilInstance = new Utils();
  void f(java.util.List<String> external) {
    Utils.doWork();
    utilInstance.doWork();
    external.size();
  }
}"#;
        let (m, idx) = project(&[("Client.java", src)]);
        let v = check_unqualified_static(&m, 0, &idx);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].line, 7);
        assert_eq!(static_accesses(&m, 0, &idx).len(), 2);
    }
}
