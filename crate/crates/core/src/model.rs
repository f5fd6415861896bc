//! Per-file syntactic facts consumed by the checkers.
//!
//! A [`SourceFileModel`] is built once per file by [`crate::parse`] and is
//! immutable afterwards. Nested and local types are flattened into
//! [`SourceFileModel::types`] in source order; the enclosing type keeps an
//! [`MemberKind::InnerType`] member pointing at them by name.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum TypeKind {
    Class,
    Enum,
    Interface,
    Record,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Visibility {
    Public,
    Protected,
    Package,
    Private,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MemberKind {
    InstanceField,
    StaticField,
    Constructor,
    InstanceMethod,
    StaticMethod,
    InnerType,
}

impl MemberKind {
    pub fn is_field(self) -> bool {
        matches!(self, MemberKind::InstanceField | MemberKind::StaticField)
    }

    pub fn is_method(self) -> bool {
        matches!(self, MemberKind::InstanceMethod | MemberKind::StaticMethod)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFileModel {
    /// Repository-relative path with `/` separators.
    pub path: String,
    pub package: Option<PackageDecl>,
    pub imports: Vec<ImportFact>,
    pub types: Vec<TypeFact>,
    pub comments: Vec<CommentFact>,
    /// Non-blank source lines.
    pub line_count: usize,
    pub total_lines: usize,
}

impl SourceFileModel {
    pub fn members(&self) -> impl Iterator<Item = (&TypeFact, &MemberFact)> {
        self.types
            .iter()
            .flat_map(|t| t.members.iter().map(move |m| (t, m)))
    }

    /// Every body in the file: member bodies, field initializers and
    /// initializer blocks.
    pub fn bodies(&self) -> impl Iterator<Item = (&TypeFact, Option<&MemberFact>, &BodyFacts)> {
        self.types.iter().flat_map(|t| {
            let members = t
                .members
                .iter()
                .filter_map(move |m| m.body.as_ref().map(|b| (t, Some(m), b)));
            let inits = t.initializers.iter().map(move |b| (t, None, b));
            members.chain(inits)
        })
    }

    /// Parent type of `ty`, if nested.
    pub fn enclosing(&self, ty: &TypeFact) -> Option<&TypeFact> {
        ty.enclosing.and_then(|i| self.types.get(i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageDecl {
    pub name: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImportFact {
    pub line: usize,
    /// Dotted name without the trailing `.*` of wildcard imports.
    pub imported_name: String,
    pub is_static: bool,
    pub is_wildcard: bool,
    pub used: bool,
}

impl ImportFact {
    pub fn simple_name(&self) -> &str {
        self.imported_name
            .rsplit('.')
            .next()
            .unwrap_or(&self.imported_name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeFact {
    pub name: String,
    /// Name relative to the package, e.g. `Outer.Inner`.
    pub qualified_name: String,
    pub kind: TypeKind,
    pub visibility: Visibility,
    pub line: usize,
    pub end_line: usize,
    pub javadoc: Option<JavadocFact>,
    pub annotations: Vec<String>,
    pub members: Vec<MemberFact>,
    pub is_nested: bool,
    /// Declared inside a method or initializer body.
    pub is_local: bool,
    /// Index of the enclosing type in [`SourceFileModel::types`].
    pub enclosing: Option<usize>,
    /// Erased superclass name as written (may be dotted).
    pub superclass: Option<String>,
    pub interfaces: Vec<String>,
    pub type_params: Vec<String>,
    /// Record components.
    pub components: Vec<Param>,
    /// Static and instance initializer blocks plus enum constant bodies.
    pub initializers: Vec<BodyFacts>,
}

impl TypeFact {
    pub fn is_class_like(&self) -> bool {
        matches!(self.kind, TypeKind::Class | TypeKind::Enum)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub type_name: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberFact {
    pub kind: MemberKind,
    pub name: String,
    pub visibility: Visibility,
    pub line: usize,
    pub end_line: usize,
    pub is_final: bool,
    pub is_static_final: bool,
    pub is_abstract: bool,
    pub javadoc: Option<JavadocFact>,
    /// Simple annotation names, e.g. `Override`.
    pub annotations: Vec<String>,
    pub params: Vec<Param>,
    pub type_params: Vec<String>,
    /// `void` for void methods, `None` for constructors and fields.
    pub return_type_name: Option<String>,
    /// Declared type of a field.
    pub field_type_name: Option<String>,
    pub thrown_types: Vec<String>,
    pub body: Option<BodyFacts>,
    /// Fields and methods: the name is referenced somewhere in the file
    /// besides its own declaration(s).
    pub used: bool,
}

impl MemberFact {
    pub fn has_annotation(&self, name: &str) -> bool {
        self.annotations.iter().any(|a| a == name)
    }

    pub fn is_void(&self) -> bool {
        self.return_type_name.as_deref() == Some("void")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BodyFacts {
    pub catches: Vec<CatchFact>,
    pub loops: Vec<LoopFact>,
    pub string_concat_sites: Vec<ConcatSite>,
    pub member_accesses: Vec<AccessFact>,
    pub local_vars: Vec<LocalVar>,
}

impl BodyFacts {
    pub fn is_empty(&self) -> bool {
        self == &BodyFacts::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum LoopKind {
    For,
    ForEach,
    While,
    DoWhile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopFact {
    pub kind: LoopKind,
    pub line: usize,
    pub end_line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcatSite {
    pub line: usize,
    pub target_var_name: String,
    /// Declared type of the target, when declared in this file.
    pub target_type_name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum LocalKind {
    Local,
    ForEach,
    Catch,
    Resource,
    Lambda,
    Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalVar {
    pub name: String,
    pub type_name: Option<String>,
    pub line: usize,
    pub kind: LocalKind,
    pub used: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatchFact {
    pub line: usize,
    pub exception_var_name: String,
    pub is_body_empty: bool,
    pub has_comment: bool,
    pub enclosing_method_is_test: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ReceiverForm {
    ClassName,
    InstanceExpr,
    MethodReturn,
    Implicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccessFact {
    pub line: usize,
    pub member_name: String,
    pub receiver_form: ReceiverForm,
    /// Type of the receiver as resolvable inside this file; always present
    /// for `ClassName` receivers.
    pub receiver_type_name: Option<String>,
    pub is_call: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JavadocTag {
    pub name: String,
    pub arg: Option<String>,
    pub description_word_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JavadocFact {
    pub line: usize,
    pub word_count: usize,
    pub tags: Vec<JavadocTag>,
}

impl JavadocFact {
    pub fn tags_named<'a>(
        &'a self,
        names: &'a [&'a str],
    ) -> impl Iterator<Item = &'a JavadocTag> + 'a {
        self.tags
            .iter()
            .filter(move |t| names.contains(&t.name.as_str()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommentFact {
    pub start_line: usize,
    pub end_line: usize,
    pub text: String,
    pub is_javadoc: bool,
}
