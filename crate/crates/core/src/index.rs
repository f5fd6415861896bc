//! Project-wide type table: supertype edges and member signatures shared
//! by the cross-file checks.
//!
//! Only project types and `java.lang.Object` are modeled. Anything the
//! index cannot see is `External`, and every query touching an external
//! type answers "unresolved" rather than guessing.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::model::{
    AccessFact, ImportFact, MemberFact, MemberKind, ReceiverForm, SourceFileModel, TypeKind,
    Visibility,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MethodSignature {
    pub name: String,
    pub arity: usize,
    pub param_type_names: Vec<String>,
}

impl MethodSignature {
    pub fn of(member: &MemberFact) -> Self {
        let param_type_names: Vec<String> =
            member.params.iter().map(|p| p.type_name.clone()).collect();
        MethodSignature {
            name: member.name.clone(),
            arity: param_type_names.len(),
            param_type_names,
        }
    }

    fn new(name: &str, params: &[&str]) -> Self {
        MethodSignature {
            name: name.to_string(),
            arity: params.len(),
            param_type_names: params.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// The overridable methods of `java.lang.Object`.
pub fn object_methods() -> Vec<MethodSignature> {
    vec![
        MethodSignature::new("equals", &["Object"]),
        MethodSignature::new("hashCode", &[]),
        MethodSignature::new("toString", &[]),
        MethodSignature::new("clone", &[]),
        MethodSignature::new("finalize", &[]),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SuperRef {
    Local(usize),
    External(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct DeclaredMethod {
    pub signature: MethodSignature,
    pub is_static: bool,
    pub is_private: bool,
    pub deprecated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeEntry {
    pub fqn: String,
    pub simple_name: String,
    pub kind: TypeKind,
    pub file: usize,
    pub type_index: usize,
    pub supertypes: Vec<SuperRef>,
    pub methods: Vec<DeclaredMethod>,
    pub static_fields: HashSet<String>,
    pub instance_fields: HashSet<String>,
}

#[derive(Debug, Clone, Default)]
struct FileContext {
    package: String,
    imports: Vec<ImportFact>,
    /// Simple name to entry, for types declared in the file.
    local_types: Vec<(String, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OverrideResolution {
    pub overrides: bool,
    pub parent_deprecated: bool,
    pub parent_resolved: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StaticResolution {
    pub is_static_member: bool,
    pub qualified_correctly: bool,
    pub resolved: bool,
}

#[derive(Debug, Clone, Default)]
pub struct ProjectIndex {
    entries: Vec<TypeEntry>,
    by_fqn: HashMap<String, usize>,
    by_position: HashMap<(usize, usize), usize>,
    files: Vec<FileContext>,
    pub diagnostics: Vec<String>,
}

impl ProjectIndex {
    /// Indexes `models`; positions in the slice are the file ids used by
    /// the query methods.
    pub fn build(models: &[SourceFileModel]) -> ProjectIndex {
        let mut index = ProjectIndex::default();
        for (file, model) in models.iter().enumerate() {
            let package = model
                .package
                .as_ref()
                .map(|p| p.name.clone())
                .unwrap_or_default();
            let mut ctx = FileContext {
                package: package.clone(),
                imports: model.imports.clone(),
                local_types: Vec::new(),
            };
            for (ti, ty) in model.types.iter().enumerate() {
                let fqn = if package.is_empty() {
                    ty.qualified_name.clone()
                } else {
                    format!("{package}.{}", ty.qualified_name)
                };
                let mut entry = TypeEntry {
                    fqn: fqn.clone(),
                    simple_name: ty.name.clone(),
                    kind: ty.kind,
                    file,
                    type_index: ti,
                    supertypes: Vec::new(),
                    methods: Vec::new(),
                    static_fields: HashSet::new(),
                    instance_fields: HashSet::new(),
                };
                for m in &ty.members {
                    match m.kind {
                        MemberKind::InstanceMethod | MemberKind::StaticMethod => {
                            entry.methods.push(DeclaredMethod {
                                signature: MethodSignature::of(m),
                                is_static: m.kind == MemberKind::StaticMethod,
                                is_private: m.visibility == Visibility::Private,
                                deprecated: m.has_annotation("Deprecated"),
                            })
                        }
                        MemberKind::StaticField => {
                            entry.static_fields.insert(m.name.clone());
                        }
                        MemberKind::InstanceField => {
                            entry.instance_fields.insert(m.name.clone());
                        }
                        _ => {}
                    }
                }
                if ty.kind == TypeKind::Record {
                    entry
                        .instance_fields
                        .extend(ty.components.iter().map(|c| c.name.clone()));
                }
                let id = index.entries.len();
                index.entries.push(entry);
                index.by_position.insert((file, ti), id);
                // local types are indexed by position only
                if !ty.is_local {
                    if let Some(&first) = index.by_fqn.get(&fqn) {
                        let first = &index.entries[first];
                        index.diagnostics.push(format!(
                            "duplicate type {fqn} in {} (first declared in {}); keeping the first",
                            model.path, models[first.file].path
                        ));
                    } else {
                        index.by_fqn.insert(fqn, id);
                    }
                }
                ctx.local_types.push((ty.name.clone(), id));
            }
            index.files.push(ctx);
        }

        // supertype edges, rejecting any that would close a cycle
        for (file, model) in models.iter().enumerate() {
            for (ti, ty) in model.types.iter().enumerate() {
                let id = index.by_position[&(file, ti)];
                let names = ty.superclass.iter().chain(ty.interfaces.iter());
                let mut supers = Vec::new();
                for name in names {
                    match index.resolve_type(file, ti, name, model) {
                        Some(target) if target == id || index.reaches(target, id) => {
                            index.diagnostics.push(format!(
                                "{}: inheritance cycle through {} rejected",
                                model.path, index.entries[target].fqn
                            ));
                        }
                        Some(target) => supers.push(SuperRef::Local(target)),
                        None => supers.push(SuperRef::External(name.clone())),
                    }
                    // the edge must be visible to later cycle checks
                    index.entries[id].supertypes = supers.clone();
                }
            }
        }
        index
    }

    pub fn entries(&self) -> &[TypeEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry_at(&self, file: usize, type_index: usize) -> Option<&TypeEntry> {
        self.by_position
            .get(&(file, type_index))
            .map(|&i| &self.entries[i])
    }

    pub fn lookup(&self, fqn: &str) -> Option<&TypeEntry> {
        self.by_fqn.get(fqn).map(|&i| &self.entries[i])
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([from]);
        while let Some(cur) = queue.pop_front() {
            if cur == to {
                return true;
            }
            if !seen.insert(cur) {
                continue;
            }
            for s in &self.entries[cur].supertypes {
                if let SuperRef::Local(next) = s {
                    queue.push_back(*next);
                }
            }
        }
        false
    }

    /// Resolves a type name as written in `file` inside the type at
    /// `type_index`: same file, same package, single-type import, wildcard
    /// import. `None` means external.
    fn resolve_type(
        &self,
        file: usize,
        type_index: usize,
        name: &str,
        model: &SourceFileModel,
    ) -> Option<usize> {
        let ctx = &self.files[file];
        let name = name.trim_end_matches("[]");
        if let Some((head, rest)) = name.split_once('.') {
            if let Some(&id) = self.by_fqn.get(name) {
                return Some(id);
            }
            let outer = self.resolve_type(file, type_index, head, model)?;
            let fqn = format!("{}.{}", self.entries[outer].fqn, rest);
            return self.by_fqn.get(&fqn).copied();
        }

        // nested types visible from the enclosing chain first
        let mut scope = Some(type_index);
        while let Some(ti) = scope {
            let enclosing_fqn = &self.entries[self.by_position[&(file, ti)]].fqn;
            if let Some(&id) = self.by_fqn.get(&format!("{enclosing_fqn}.{name}")) {
                return Some(id);
            }
            scope = model.types.get(ti).and_then(|t| t.enclosing);
        }
        if let Some((_, id)) = ctx.local_types.iter().find(|(simple, id)| {
            simple == name && !model.types[self.entries[*id].type_index].is_nested
        }) {
            return Some(*id);
        }
        let in_package = if ctx.package.is_empty() {
            name.to_string()
        } else {
            format!("{}.{name}", ctx.package)
        };
        if let Some(&id) = self.by_fqn.get(&in_package) {
            return Some(id);
        }
        for imp in ctx
            .imports
            .iter()
            .filter(|i| !i.is_static && !i.is_wildcard)
        {
            if imp.simple_name() == name {
                return self.by_fqn.get(&imp.imported_name).copied();
            }
        }
        for imp in ctx.imports.iter().filter(|i| !i.is_static && i.is_wildcard) {
            if let Some(&id) = self.by_fqn.get(&format!("{}.{name}", imp.imported_name)) {
                return Some(id);
            }
        }
        None
    }

    /// Resolves a type name from the perspective of a file and type, as
    /// [`ProjectIndex::build`] does for supertypes.
    pub fn resolve_type_name(
        &self,
        models: &[SourceFileModel],
        file: usize,
        type_index: usize,
        name: &str,
    ) -> Option<&TypeEntry> {
        self.resolve_type(file, type_index, name, &models[file])
            .map(|i| &self.entries[i])
    }

    /// Transitive supertypes of an entry in breadth-first order, externals
    /// included. `java.lang.Object` is implicit and not listed.
    pub fn supertypes(&self, id: usize) -> Vec<SuperRef> {
        let mut out = Vec::new();
        let mut seen = HashSet::from([id]);
        let mut queue = VecDeque::from([id]);
        while let Some(cur) = queue.pop_front() {
            for s in &self.entries[cur].supertypes {
                match s {
                    SuperRef::Local(next) => {
                        if seen.insert(*next) {
                            out.push(s.clone());
                            queue.push_back(*next);
                        }
                    }
                    SuperRef::External(_) => {
                        if !out.contains(s) {
                            out.push(s.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// Does the instance `method` of the type at (`file`, `type_index`)
    /// override a declaration in a project supertype or in `Object`?
    pub fn resolve_override(
        &self,
        file: usize,
        type_index: usize,
        method: &MemberFact,
    ) -> OverrideResolution {
        let Some(&id) = self.by_position.get(&(file, type_index)) else {
            return OverrideResolution::default();
        };
        if method.kind != MemberKind::InstanceMethod || method.visibility == Visibility::Private {
            return OverrideResolution {
                parent_resolved: true,
                ..Default::default()
            };
        }
        let sig = MethodSignature::of(method);
        let mut result = OverrideResolution::default();
        let mut any_external = false;
        for s in self.supertypes(id) {
            match s {
                SuperRef::Local(sup) => {
                    for m in &self.entries[sup].methods {
                        if m.signature == sig && !m.is_static && !m.is_private {
                            result.overrides = true;
                            result.parent_deprecated |= m.deprecated;
                        }
                    }
                }
                SuperRef::External(_) => any_external = true,
            }
        }
        let interface_only = self.entries[id].kind == TypeKind::Interface;
        if !interface_only && object_methods().contains(&sig) {
            result.overrides = true;
        }
        result.parent_resolved = result.overrides || !any_external;
        result
    }

    /// Classifies a member access. Only accesses whose receiver type is a
    /// project type declaring (or inheriting from project supertypes) the
    /// member unambiguously as static or instance are resolved.
    pub fn resolve_static_access(
        &self,
        models: &[SourceFileModel],
        file: usize,
        type_index: usize,
        access: &AccessFact,
    ) -> StaticResolution {
        let unresolved = StaticResolution::default();
        if access.receiver_form == ReceiverForm::Implicit {
            return unresolved;
        }
        let Some(receiver) = access.receiver_type_name.as_deref() else {
            return unresolved;
        };
        let Some(target) = self.resolve_type(file, type_index, receiver, &models[file]) else {
            return unresolved;
        };
        let mut static_hit = false;
        let mut instance_hit = false;
        let mut chain = vec![SuperRef::Local(target)];
        chain.extend(self.supertypes(target));
        let mut saw_external = false;
        for s in chain {
            let entry = match s {
                SuperRef::Local(i) => &self.entries[i],
                SuperRef::External(_) => {
                    saw_external = true;
                    continue;
                }
            };
            if access.is_call {
                for m in entry
                    .methods
                    .iter()
                    .filter(|m| m.signature.name == access.member_name)
                {
                    if m.is_static {
                        static_hit = true;
                    } else {
                        instance_hit = true;
                    }
                }
            } else {
                static_hit |= entry.static_fields.contains(&access.member_name);
                instance_hit |= entry.instance_fields.contains(&access.member_name);
            }
        }
        if static_hit == instance_hit || (!static_hit && saw_external) {
            return unresolved;
        }
        if !static_hit && !instance_hit {
            return unresolved;
        }
        StaticResolution {
            is_static_member: static_hit,
            qualified_correctly: access.receiver_form == ReceiverForm::ClassName,
            resolved: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_compilation_unit;

    fn models(files: &[(&str, &str)]) -> Vec<SourceFileModel> {
        files
            .iter()
            .map(|(path, src)| parse_compilation_unit(src, path).unwrap())
            .collect()
    }

    fn method<'a>(m: &'a [SourceFileModel], file: usize, name: &str) -> (usize, &'a MemberFact) {
        m[file]
            .types
            .iter()
            .enumerate()
            .find_map(|(ti, t)| t.members.iter().find(|x| x.name == name).map(|x| (ti, x)))
            .unwrap()
    }

    #[test]
    fn single_edge_and_object_root() {
        let m = models(&[
            ("A.java", "class A { void work() {} }"),
            (
                "B.java",
                "class B extends A { void work() {} public String toString() { return \"\"; } }",
            ),
        ]);
        let idx = ProjectIndex::build(&m);
        let b = idx.entry_at(1, 0).unwrap();
        assert_eq!(b.supertypes, vec![SuperRef::Local(0)]);
        let (ti, work) = method(&m, 1, "work");
        let r = idx.resolve_override(1, ti, work);
        assert!(r.overrides && r.parent_resolved && !r.parent_deprecated);
        let (ti, ts) = method(&m, 1, "toString");
        assert!(idx.resolve_override(1, ti, ts).overrides);
    }

    #[test]
    fn external_supertype_is_unresolved() {
        let m = models(&[(
            "C.java",
            "class C implements Runnable { public void run() {} }",
        )]);
        let idx = ProjectIndex::build(&m);
        assert_eq!(
            idx.entry_at(0, 0).unwrap().supertypes,
            vec![SuperRef::External("Runnable".into())]
        );
        let (ti, run) = method(&m, 0, "run");
        let r = idx.resolve_override(0, ti, run);
        assert!(!r.overrides);
        assert!(!r.parent_resolved);
    }

    #[test]
    fn deprecated_parent() {
        let m = models(&[
            ("A.java", "class A { @Deprecated void work() {} }"),
            ("B.java", "class B extends A { void work() {} }"),
        ]);
        let idx = ProjectIndex::build(&m);
        let (ti, work) = method(&m, 1, "work");
        let r = idx.resolve_override(1, ti, work);
        assert!(r.overrides && r.parent_deprecated);
    }

    #[test]
    fn empty_index() {
        assert!(ProjectIndex::build(&[]).is_empty());
    }

    #[test]
    fn resolution_order_and_imports() {
        let m = models(&[
            (
                "p/Base.java",
                "package p; public class Base { public void f() {} }",
            ),
            (
                "q/Base.java",
                "package q; public class Base { public void g() {} }",
            ),
            (
                "r/Sub.java",
                "package r; import q.Base; class Sub extends Base { public void g() {} }",
            ),
            (
                "s/Sub.java",
                "package s; import p.*; class Sub extends Base { public void f() {} }",
            ),
            (
                "p/Same.java",
                "package p; class Same extends Base { public void f() {} }",
            ),
        ]);
        let idx = ProjectIndex::build(&m);
        assert_eq!(
            idx.entry_at(2, 0).unwrap().supertypes,
            vec![SuperRef::Local(1)]
        );
        assert_eq!(
            idx.entry_at(3, 0).unwrap().supertypes,
            vec![SuperRef::Local(0)]
        );
        assert_eq!(
            idx.entry_at(4, 0).unwrap().supertypes,
            vec![SuperRef::Local(0)]
        );
    }

    #[test]
    fn cycles_are_rejected() {
        let m = models(&[
            ("A.java", "class A extends B {}"),
            ("B.java", "class B extends A {}"),
        ]);
        let idx = ProjectIndex::build(&m);
        assert_eq!(
            idx.entry_at(0, 0).unwrap().supertypes,
            vec![SuperRef::Local(1)]
        );
        assert!(idx.entry_at(1, 0).unwrap().supertypes.is_empty());
        assert_eq!(idx.diagnostics.len(), 1);
        // traversal terminates
        assert_eq!(idx.supertypes(0).len(), 1);
    }

    #[test]
    fn duplicate_types_first_wins() {
        let m = models(&[
            ("a/A.java", "package x; class A {}"),
            ("b/A.java", "package x; class A {}"),
        ]);
        let idx = ProjectIndex::build(&m);
        assert_eq!(idx.lookup("x.A").unwrap().file, 0);
        assert_eq!(idx.diagnostics.len(), 1);
    }

    #[test]
    fn static_access_classification() {
        let src = r#"
class Utils {
  static void doWork() {}
  void inst() {}
}
class Client {
  Utils utilInstance;
  Utils getUtils() { return utilInstance; }
  void f(StringBuilder sb) {
    Utils.doWork();
    utilInstance.doWork();
    getUtils().doWork();
    utilInstance.inst();
    sb.append("x");
  }
}"#;
        let m = models(&[("Client.java", src)]);
        let idx = ProjectIndex::build(&m);
        let body = m[0].types[1].members[2].body.as_ref().unwrap();
        let res: Vec<_> = body
            .member_accesses
            .iter()
            .map(|a| idx.resolve_static_access(&m, 0, 1, a))
            .collect();
        let flags: Vec<_> = res
            .iter()
            .map(|r| (r.resolved, r.is_static_member, r.qualified_correctly))
            .collect();
        assert_eq!(
            flags,
            vec![
                (true, true, true),
                (true, true, false),
                (true, true, false),
                (false, false, false),
                (true, false, false),
                (false, false, false),
            ]
        );
    }

    #[test]
    fn nested_type_resolution() {
        let src = "class Outer { static class Base { void f() {} } static class Impl extends Base { void f() {} } }";
        let m = models(&[("Outer.java", src)]);
        let idx = ProjectIndex::build(&m);
        assert_eq!(
            idx.entry_at(0, 2).unwrap().supertypes,
            vec![SuperRef::Local(1)]
        );
    }

    /// Brute-force oracle: collect every signature reachable through
    /// hand-written edges and compare with the index answer.
    #[test]
    fn override_matches_brute_force_on_small_hierarchies() {
        let files = [
            ("I.java", "interface I { void a(); void b(int x); }"),
            ("A.java", "abstract class A implements I { public void a() {} void c(String s) {} }"),
            ("B.java", "class B extends A { public void b(int x) {} void c(String s) {} void d() {} public int hashCode() { return 1; } }"),
            ("C.java", "class C extends B { void c(Object o) {} void d() {} public boolean equals(Object o) { return true; } }"),
        ];
        let m = models(&files);
        let idx = ProjectIndex::build(&m);
        let declared: Vec<HashSet<(String, Vec<String>)>> = m
            .iter()
            .map(|f| {
                f.types[0]
                    .members
                    .iter()
                    .map(|x| {
                        (
                            x.name.clone(),
                            x.params.iter().map(|p| p.type_name.clone()).collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        let ancestors: [&[usize]; 4] = [&[], &[0], &[1, 0], &[2, 1, 0]];
        let object: HashSet<(String, Vec<String>)> = object_methods()
            .into_iter()
            .map(|s| (s.name, s.param_type_names))
            .collect();
        for (fi, f) in m.iter().enumerate() {
            for member in &f.types[0].members {
                let key = (
                    member.name.clone(),
                    member.params.iter().map(|p| p.type_name.clone()).collect(),
                );
                let expected = ancestors[fi].iter().any(|&a| declared[a].contains(&key))
                    || (f.types[0].kind != TypeKind::Interface && object.contains(&key));
                assert_eq!(
                    idx.resolve_override(fi, 0, member).overrides,
                    expected,
                    "{}.{}",
                    f.path,
                    member.name
                );
            }
        }
    }
}
