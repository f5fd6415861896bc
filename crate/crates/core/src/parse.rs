//! Java frontend: tree-sitter-java syntax tree to [`SourceFileModel`].
//!
//! The fact extraction runs in two steps. A first sweep collects file-wide
//! lookup tables (identifier occurrences, method return types). A second,
//! structural walk builds type and member facts, scanning every executable
//! body with a scope stack so that variables can be typed file-locally.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};

use tree_sitter::{Node, Parser, Tree};

use crate::error::ParseError;
use crate::javadoc::{extract_javadoc, is_javadoc};
use crate::model::*;

thread_local! {
    static PARSER: RefCell<Parser> = RefCell::new({
        let mut p = Parser::new();
        p.set_language(&tree_sitter_java::LANGUAGE.into())
            .expect("tree-sitter-java grammar is compatible");
        p
    });
}

/// Parses one compilation unit. `path` is the repository-relative path
/// recorded in the model and in errors.
pub fn parse_compilation_unit(source: &str, path: &str) -> Result<SourceFileModel, ParseError> {
    let tree = PARSER
        .with(|p| p.borrow_mut().parse(source, None))
        .ok_or_else(|| ParseError {
            path: path.to_string(),
            line: 1,
            column: 1,
            message: "parser produced no tree".into(),
        })?;
    if let Some(err) = first_error(&tree, source, path) {
        return Err(err);
    }
    Ok(FileParser::new(source, path, &tree).run())
}

/// Whether `text` parses without errors as a statement, a class member or
/// an import. Labels, bare names and literals are rejected since prose
/// such as `TODO: fix this;` is otherwise accepted by the grammar.
pub fn parses_as_code(text: &str) -> bool {
    let wrappers = [
        ("class __W { void __m() {\n", "\n} }"),
        ("class __W {\n", "\n}"),
        ("", "\nclass __W {}"),
    ];
    PARSER.with(|p| {
        let mut p = p.borrow_mut();
        wrappers.iter().any(|(pre, post)| {
            let src = format!("{pre}{text}{post}");
            match p.parse(&src, None) {
                Some(t) if !t.root_node().has_error() => !has_prose_shape(t.root_node(), &src),
                _ => false,
            }
        })
    })
}

const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
    "true",
    "false",
    "null",
];

fn has_prose_shape(root: Node, src: &str) -> bool {
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        match node.kind() {
            "labeled_statement" => return true,
            "expression_statement" => {
                let expr = named_children(node).into_iter().find(|c| !is_comment(*c));
                if expr.is_some_and(|e| e.kind() == "identifier" || e.kind().ends_with("literal")) {
                    return true;
                }
            }
            "variable_declarator" => {
                if let Some(name) = node.child_by_field_name("name") {
                    if KEYWORDS.contains(&node_text(name, src)) {
                        return true;
                    }
                }
            }
            _ => {}
        }
        stack.extend(children(node));
    }
    false
}

fn first_error(tree: &Tree, src: &str, path: &str) -> Option<ParseError> {
    let root = tree.root_node();
    if !root.has_error() {
        return None;
    }
    let mut cursor = root.walk();
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if node.is_error() || node.is_missing() {
            let pos = node.start_position();
            let message = if node.is_missing() {
                format!("missing `{}`", node.kind())
            } else {
                let text = node_text(node, src);
                let snippet: String = text.lines().next().unwrap_or("").chars().take(40).collect();
                format!("unexpected `{snippet}`")
            };
            return Some(ParseError {
                path: path.to_string(),
                line: pos.row + 1,
                column: pos.column + 1,
                message,
            });
        }
        if node.has_error() {
            let children: Vec<_> = node.children(&mut cursor).collect();
            stack.extend(children.into_iter().rev());
        }
    }
    let pos = root.start_position();
    Some(ParseError {
        path: path.to_string(),
        line: pos.row + 1,
        column: pos.column + 1,
        message: "syntax error".into(),
    })
}

fn node_text<'s>(node: Node, src: &'s str) -> &'s str {
    &src[node.byte_range()]
}

fn line_of(node: Node) -> usize {
    node.start_position().row + 1
}

fn end_line_of(node: Node) -> usize {
    node.end_position().row + 1
}

fn named_children<'t>(node: Node<'t>) -> Vec<Node<'t>> {
    let mut cursor = node.walk();
    node.named_children(&mut cursor).collect()
}

fn children<'t>(node: Node<'t>) -> Vec<Node<'t>> {
    let mut cursor = node.walk();
    node.children(&mut cursor).collect()
}

fn is_comment(node: Node) -> bool {
    matches!(node.kind(), "line_comment" | "block_comment")
}

/// Type reference with generic arguments, annotations and whitespace
/// removed; qualification is kept (`java.util.Map.Entry[]`).
pub(crate) fn type_ref(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut depth = 0usize;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '<' => depth += 1,
            '>' => depth = depth.saturating_sub(1),
            '@' if depth == 0 => {
                // skip annotation name (and a simple argument list)
                while chars
                    .peek()
                    .is_some_and(|c| c.is_alphanumeric() || *c == '.' || *c == '_')
                {
                    chars.next();
                }
                if chars.peek() == Some(&'(') {
                    let mut parens = 0;
                    for c in chars.by_ref() {
                        match c {
                            '(' => parens += 1,
                            ')' => {
                                parens -= 1;
                                if parens == 0 {
                                    break;
                                }
                            }
                            _ => {}
                        }
                    }
                }
            }
            c if depth == 0 && !c.is_whitespace() => out.push(c),
            _ => {}
        }
    }
    out
}

/// Simple erased name: last segment of [`type_ref`], array suffix kept.
pub(crate) fn erase(text: &str) -> String {
    let full = type_ref(text);
    let (base, dims) = match full.find('[') {
        Some(i) => (&full[..i], &full[i..]),
        None => (full.as_str(), ""),
    };
    let simple = base.rsplit('.').next().unwrap_or(base);
    format!("{simple}{dims}")
}

#[derive(Default)]
struct Modifiers {
    visibility: Option<Visibility>,
    is_static: bool,
    is_final: bool,
    is_abstract: bool,
    is_default: bool,
    annotations: Vec<String>,
    javadoc: Option<JavadocFact>,
}

struct TypeScope {
    index: usize,
    simple_name: String,
    fields: HashMap<String, String>,
}

#[derive(Default)]
struct BodyCtx {
    facts: BodyFacts,
    scopes: Vec<HashMap<String, Option<String>>>,
    loop_depth: usize,
    is_test: bool,
}

impl BodyCtx {
    fn new(is_test: bool) -> Self {
        BodyCtx {
            scopes: vec![HashMap::new()],
            is_test,
            ..Default::default()
        }
    }

    fn declare(&mut self, name: &str, type_name: Option<String>) {
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name.to_string(), type_name);
        }
    }

    fn lookup(&self, name: &str) -> Option<&Option<String>> {
        self.scopes.iter().rev().find_map(|s| s.get(name))
    }
}

struct FileParser<'a, 't> {
    src: &'a str,
    path: &'a str,
    tree: &'t Tree,
    types: Vec<TypeFact>,
    type_stack: Vec<TypeScope>,
    /// Method name to return type, `None` when overloads disagree.
    method_returns: HashMap<String, Option<String>>,
    identifier_counts: HashMap<String, usize>,
    member_decl_counts: HashMap<String, usize>,
}

impl<'a, 't> FileParser<'a, 't> {
    fn new(src: &'a str, path: &'a str, tree: &'t Tree) -> Self {
        FileParser {
            src,
            path,
            tree,
            types: Vec::new(),
            type_stack: Vec::new(),
            method_returns: HashMap::new(),
            identifier_counts: HashMap::new(),
            member_decl_counts: HashMap::new(),
        }
    }

    fn text(&self, node: Node) -> &'a str {
        node_text(node, self.src)
    }

    fn run(mut self) -> SourceFileModel {
        let root = self.tree.root_node();
        let mut comments = Vec::new();
        self.sweep(root, &mut comments);

        let mut package = None;
        let mut imports = Vec::new();
        for child in named_children(root) {
            match child.kind() {
                "package_declaration" => {
                    let name = named_children(child)
                        .into_iter()
                        .find(|n| matches!(n.kind(), "scoped_identifier" | "identifier"))
                        .map(|n| self.text(n).split_whitespace().collect::<String>())
                        .unwrap_or_default();
                    package = Some(PackageDecl {
                        name,
                        line: line_of(child),
                    });
                }
                "import_declaration" => imports.push(self.import(child, &comments)),
                "class_declaration"
                | "interface_declaration"
                | "enum_declaration"
                | "record_declaration" => {
                    self.collect_type(child, None, false);
                }
                _ => {}
            }
        }

        let total_lines = self.src.lines().count();
        let line_count = self.src.lines().filter(|l| !l.trim().is_empty()).count();
        SourceFileModel {
            path: self.path.to_string(),
            package,
            imports,
            types: self.types,
            comments,
            line_count,
            total_lines,
        }
    }

    /// File-wide tables: comments, identifier occurrences outside package
    /// and import declarations, member declaration counts, return types.
    fn sweep(&mut self, root: Node, comments: &mut Vec<CommentFact>) {
        let mut stack = vec![root];
        let mut returns: HashMap<String, HashSet<String>> = HashMap::new();
        while let Some(node) = stack.pop() {
            match node.kind() {
                "line_comment" | "block_comment" => {
                    let text = self.text(node).to_string();
                    comments.push(CommentFact {
                        start_line: line_of(node),
                        end_line: end_line_of(node),
                        is_javadoc: node.kind() == "block_comment" && is_javadoc(&text),
                        text,
                    });
                    continue;
                }
                "package_declaration" | "import_declaration" => continue,
                "identifier" | "type_identifier" => {
                    *self
                        .identifier_counts
                        .entry(self.text(node).to_string())
                        .or_default() += 1;
                }
                "method_declaration" => {
                    if let Some(name) = node.child_by_field_name("name") {
                        let name = self.text(name).to_string();
                        *self.member_decl_counts.entry(name.clone()).or_default() += 1;
                        if let Some(ty) = node.child_by_field_name("type") {
                            returns
                                .entry(name)
                                .or_default()
                                .insert(erase(self.text(ty)));
                        }
                    }
                }
                "field_declaration" | "constant_declaration" => {
                    for decl in named_children(node) {
                        if decl.kind() == "variable_declarator" {
                            if let Some(name) = decl.child_by_field_name("name") {
                                *self
                                    .member_decl_counts
                                    .entry(self.text(name).to_string())
                                    .or_default() += 1;
                            }
                        }
                    }
                }
                _ => {}
            }
            let kids = children(node);
            stack.extend(kids.into_iter().rev());
        }
        comments.sort_by_key(|c| (c.start_line, c.end_line));
        self.method_returns = returns
            .into_iter()
            .map(|(name, types)| {
                let unique = (types.len() == 1).then(|| types.into_iter().next().unwrap());
                (name, unique)
            })
            .collect();
    }

    fn import(&self, node: Node, comments: &[CommentFact]) -> ImportFact {
        let kids = children(node);
        let is_static = kids.iter().any(|k| k.kind() == "static");
        let is_wildcard = kids.iter().any(|k| k.kind() == "asterisk");
        let imported_name = kids
            .iter()
            .find(|n| matches!(n.kind(), "scoped_identifier" | "identifier"))
            .map(|n| self.text(*n).split_whitespace().collect::<String>())
            .unwrap_or_default();
        let simple = imported_name.rsplit('.').next().unwrap_or("").to_string();
        let used = is_wildcard
            || self.identifier_counts.get(&simple).copied().unwrap_or(0) > 0
            || comments
                .iter()
                .filter(|c| c.is_javadoc)
                .any(|c| contains_word(&c.text, &simple));
        ImportFact {
            line: line_of(node),
            imported_name,
            is_static,
            is_wildcard,
            used,
        }
    }

    fn modifiers(&self, decl: Node) -> Modifiers {
        let mut m = Modifiers::default();
        let Some(mods) = named_children(decl)
            .into_iter()
            .find(|c| c.kind() == "modifiers")
        else {
            return m;
        };
        for child in children(mods) {
            match child.kind() {
                "public" => m.visibility = Some(Visibility::Public),
                "protected" => m.visibility = Some(Visibility::Protected),
                "private" => m.visibility = Some(Visibility::Private),
                "static" => m.is_static = true,
                "final" => m.is_final = true,
                "abstract" => m.is_abstract = true,
                "default" => m.is_default = true,
                "marker_annotation" | "annotation" => {
                    if let Some(name) = child.child_by_field_name("name") {
                        let name = self.text(name);
                        m.annotations
                            .push(name.rsplit('.').next().unwrap_or(name).trim().to_string());
                    }
                }
                "block_comment" => {
                    let text = self.text(child);
                    if is_javadoc(text) {
                        m.javadoc = Some(extract_javadoc(text, line_of(child)));
                    }
                }
                _ => {}
            }
        }
        m
    }

    /// Javadoc directly above `decl`, skipping over other comments.
    fn javadoc_for(&self, decl: Node, mods: &Modifiers) -> Option<JavadocFact> {
        let mut prev = decl.prev_sibling();
        while let Some(node) = prev {
            match node.kind() {
                "block_comment" => {
                    let text = self.text(node);
                    if is_javadoc(text) {
                        return Some(extract_javadoc(text, line_of(node)));
                    }
                }
                "line_comment" => {}
                _ => break,
            }
            prev = node.prev_sibling();
        }
        mods.javadoc.clone()
    }

    fn params(&self, node: Option<Node>) -> Vec<Param> {
        let Some(node) = node else { return Vec::new() };
        let mut out = Vec::new();
        for p in named_children(node) {
            match p.kind() {
                "formal_parameter" => {
                    let (Some(name), Some(ty)) =
                        (p.child_by_field_name("name"), p.child_by_field_name("type"))
                    else {
                        continue;
                    };
                    let mut type_name = erase(self.text(ty));
                    if let Some(d) = p.child_by_field_name("dimensions") {
                        type_name.push_str(&"[]".repeat(self.text(d).matches('[').count()));
                    }
                    out.push(Param {
                        name: self.text(name).to_string(),
                        type_name,
                        line: line_of(name),
                    });
                }
                "spread_parameter" => {
                    let kids = named_children(p);
                    let ty = kids
                        .iter()
                        .find(|k| k.kind() != "modifiers" && k.kind() != "variable_declarator");
                    let name = kids
                        .iter()
                        .find(|k| k.kind() == "variable_declarator")
                        .and_then(|d| d.child_by_field_name("name"));
                    if let (Some(ty), Some(name)) = (ty, name) {
                        out.push(Param {
                            name: self.text(name).to_string(),
                            type_name: format!("{}[]", erase(self.text(*ty))),
                            line: line_of(name),
                        });
                    }
                }
                _ => {}
            }
        }
        out
    }

    fn type_params(&self, node: Option<Node>) -> Vec<String> {
        let Some(node) = node else { return Vec::new() };
        named_children(node)
            .into_iter()
            .filter(|c| c.kind() == "type_parameter")
            .filter_map(|tp| {
                named_children(tp)
                    .into_iter()
                    .find(|c| matches!(c.kind(), "type_identifier" | "identifier"))
                    .map(|n| self.text(n).to_string())
            })
            .collect()
    }

    fn type_list(&self, node: Node) -> Vec<String> {
        let mut out = Vec::new();
        for child in named_children(node) {
            if child.kind() == "type_list" {
                out.extend(self.type_list(child));
            } else if !is_comment(child) {
                out.push(type_ref(self.text(child)));
            }
        }
        out
    }

    fn field_types_of(&self, body: Node) -> HashMap<String, String> {
        let mut fields = HashMap::new();
        let mut containers = vec![body];
        while let Some(container) = containers.pop() {
            for child in named_children(container) {
                match child.kind() {
                    "enum_body_declarations" => containers.push(child),
                    "field_declaration" | "constant_declaration" => {
                        let Some(ty) = child.child_by_field_name("type") else {
                            continue;
                        };
                        for decl in named_children(child) {
                            if decl.kind() != "variable_declarator" {
                                continue;
                            }
                            if let Some(name) = decl.child_by_field_name("name") {
                                fields.insert(self.text(name).to_string(), erase(self.text(ty)));
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        fields
    }

    fn collect_type(
        &mut self,
        node: Node,
        enclosing: Option<usize>,
        is_local: bool,
    ) -> Option<usize> {
        let kind = match node.kind() {
            "class_declaration" => TypeKind::Class,
            "interface_declaration" => TypeKind::Interface,
            "enum_declaration" => TypeKind::Enum,
            "record_declaration" => TypeKind::Record,
            _ => return None,
        };
        let name = self.text(node.child_by_field_name("name")?).to_string();
        let mods = self.modifiers(node);
        let parent_is_interface =
            enclosing.is_some_and(|i| self.types[i].kind == TypeKind::Interface);
        let visibility = mods.visibility.unwrap_or(if parent_is_interface {
            Visibility::Public
        } else {
            Visibility::Package
        });
        let javadoc = self.javadoc_for(node, &mods);
        let superclass = node
            .child_by_field_name("superclass")
            .and_then(|s| named_children(s).into_iter().find(|c| !is_comment(*c)))
            .map(|t| type_ref(self.text(t)));
        let interfaces = match node.child_by_field_name("interfaces") {
            Some(n) => self.type_list(n),
            None => named_children(node)
                .into_iter()
                .find(|c| c.kind() == "extends_interfaces")
                .map(|n| self.type_list(n))
                .unwrap_or_default(),
        };
        let qualified_name = match enclosing {
            Some(i) => format!("{}.{}", self.types[i].qualified_name, name),
            None => name.clone(),
        };
        let components = if kind == TypeKind::Record {
            self.params(node.child_by_field_name("parameters"))
        } else {
            Vec::new()
        };
        let body = node.child_by_field_name("body");

        let idx = self.types.len();
        self.types.push(TypeFact {
            name: name.clone(),
            qualified_name,
            kind,
            visibility,
            line: line_of(node),
            end_line: end_line_of(node),
            javadoc,
            annotations: mods.annotations,
            members: Vec::new(),
            is_nested: enclosing.is_some(),
            is_local,
            enclosing,
            superclass,
            interfaces,
            type_params: self.type_params(node.child_by_field_name("type_parameters")),
            components: components.clone(),
            initializers: Vec::new(),
        });

        let Some(body) = body else { return Some(idx) };
        self.type_stack.push(TypeScope {
            index: idx,
            simple_name: name,
            fields: self.field_types_of(body),
        });
        let mut members = Vec::new();
        let mut initializers = Vec::new();
        let mut containers = vec![body];
        let mut i = 0;
        while i < containers.len() {
            let container = containers[i];
            i += 1;
            for child in named_children(container) {
                match child.kind() {
                    "enum_body_declarations" => containers.push(child),
                    "field_declaration" | "constant_declaration" => {
                        members.extend(self.fields(child, kind));
                    }
                    "method_declaration" => members.push(self.method(child, kind)),
                    "constructor_declaration" => members.push(self.constructor(child, kind, None)),
                    "compact_constructor_declaration" => {
                        members.push(self.constructor(child, kind, Some(&components)))
                    }
                    "class_declaration"
                    | "interface_declaration"
                    | "enum_declaration"
                    | "record_declaration" => {
                        if let Some(inner) = self.collect_type(child, Some(idx), false) {
                            let t = &self.types[inner];
                            members.push(inner_type_member(t));
                        }
                    }
                    "static_initializer" | "block" => {
                        let mut ctx = BodyCtx::new(false);
                        self.scan(child, &mut ctx);
                        self.finish_body(child, &mut ctx);
                        initializers.push(ctx.facts);
                    }
                    "enum_constant" => {
                        let mut ctx = BodyCtx::new(false);
                        for part in named_children(child) {
                            if matches!(part.kind(), "argument_list" | "class_body") {
                                self.scan(part, &mut ctx);
                            }
                        }
                        if !ctx.facts.is_empty() {
                            initializers.push(ctx.facts);
                        }
                    }
                    _ => {}
                }
            }
        }
        self.type_stack.pop();
        let t = &mut self.types[idx];
        t.members = members;
        t.initializers = initializers;
        Some(idx)
    }

    fn fields(&mut self, node: Node, owner: TypeKind) -> Vec<MemberFact> {
        let mods = self.modifiers(node);
        let in_interface = owner == TypeKind::Interface;
        let is_static = mods.is_static || in_interface;
        let is_final = mods.is_final || in_interface;
        let visibility = mods.visibility.unwrap_or(if in_interface {
            Visibility::Public
        } else {
            Visibility::Package
        });
        let javadoc = self.javadoc_for(node, &mods);
        let base_type = node
            .child_by_field_name("type")
            .map(|t| erase(self.text(t)))
            .unwrap_or_default();
        let mut out = Vec::new();
        for decl in named_children(node) {
            if decl.kind() != "variable_declarator" {
                continue;
            }
            let Some(name_node) = decl.child_by_field_name("name") else {
                continue;
            };
            let name = self.text(name_node).to_string();
            let mut field_type = base_type.clone();
            if let Some(d) = decl.child_by_field_name("dimensions") {
                field_type.push_str(&"[]".repeat(self.text(d).matches('[').count()));
            }
            let body = decl.child_by_field_name("value").map(|value| {
                let mut ctx = BodyCtx::new(false);
                self.scan(value, &mut ctx);
                self.finish_body(value, &mut ctx);
                ctx.facts
            });
            out.push(MemberFact {
                kind: if is_static {
                    MemberKind::StaticField
                } else {
                    MemberKind::InstanceField
                },
                used: self.is_member_used(&name),
                name,
                visibility,
                line: line_of(name_node),
                end_line: end_line_of(decl),
                is_final,
                is_static_final: is_static && is_final,
                is_abstract: false,
                javadoc: javadoc.clone(),
                annotations: mods.annotations.clone(),
                params: Vec::new(),
                type_params: Vec::new(),
                return_type_name: None,
                field_type_name: Some(field_type),
                thrown_types: Vec::new(),
                body,
            });
        }
        out
    }

    fn is_member_used(&self, name: &str) -> bool {
        let occurrences = self.identifier_counts.get(name).copied().unwrap_or(0);
        let decls = self.member_decl_counts.get(name).copied().unwrap_or(0);
        occurrences > decls
    }

    fn thrown(&self, node: Node) -> Vec<String> {
        named_children(node)
            .into_iter()
            .find(|c| c.kind() == "throws")
            .map(|t| {
                named_children(t)
                    .into_iter()
                    .filter(|c| !is_comment(*c))
                    .map(|c| erase(self.text(c)))
                    .collect()
            })
            .unwrap_or_default()
    }

    fn method(&mut self, node: Node, owner: TypeKind) -> MemberFact {
        let mods = self.modifiers(node);
        let in_interface = owner == TypeKind::Interface;
        let name_node = node.child_by_field_name("name");
        let name = name_node
            .map(|n| self.text(n).to_string())
            .unwrap_or_default();
        let params = self.params(node.child_by_field_name("parameters"));
        let body_node = node.child_by_field_name("body");
        let is_test = is_test_method(&name, &mods.annotations);
        let body = body_node.map(|b| self.method_body(b, &params, is_test));
        let visibility = mods.visibility.unwrap_or(if in_interface {
            Visibility::Public
        } else {
            Visibility::Package
        });
        let is_abstract = mods.is_abstract
            || (in_interface && body_node.is_none() && !mods.is_static && !mods.is_default);
        MemberFact {
            kind: if mods.is_static {
                MemberKind::StaticMethod
            } else {
                MemberKind::InstanceMethod
            },
            used: self.is_member_used(&name),
            line: name_node.map(line_of).unwrap_or_else(|| line_of(node)),
            end_line: end_line_of(node),
            name,
            visibility,
            is_final: mods.is_final,
            is_static_final: false,
            is_abstract,
            javadoc: self.javadoc_for(node, &mods),
            annotations: mods.annotations,
            params,
            type_params: self.type_params(node.child_by_field_name("type_parameters")),
            return_type_name: node
                .child_by_field_name("type")
                .map(|t| erase(self.text(t))),
            field_type_name: None,
            thrown_types: self.thrown(node),
            body,
        }
    }

    fn constructor(
        &mut self,
        node: Node,
        owner: TypeKind,
        components: Option<&[Param]>,
    ) -> MemberFact {
        let mods = self.modifiers(node);
        let name_node = node.child_by_field_name("name");
        let name = name_node
            .map(|n| self.text(n).to_string())
            .unwrap_or_default();
        let params = match components {
            Some(c) => c.to_vec(),
            None => self.params(node.child_by_field_name("parameters")),
        };
        let body = node
            .child_by_field_name("body")
            .map(|b| self.method_body(b, &params, false));
        let visibility = mods.visibility.unwrap_or(match owner {
            TypeKind::Enum => Visibility::Private,
            _ => Visibility::Package,
        });
        MemberFact {
            kind: MemberKind::Constructor,
            used: true,
            name,
            visibility,
            line: name_node.map(line_of).unwrap_or_else(|| line_of(node)),
            end_line: end_line_of(node),
            is_final: false,
            is_static_final: false,
            is_abstract: false,
            javadoc: self.javadoc_for(node, &mods),
            annotations: mods.annotations,
            // compact constructors declare no parameters of their own
            params: if components.is_some() {
                Vec::new()
            } else {
                params
            },
            type_params: self.type_params(node.child_by_field_name("type_parameters")),
            return_type_name: None,
            field_type_name: None,
            thrown_types: self.thrown(node),
            body,
        }
    }

    fn method_body(&mut self, body: Node, params: &[Param], is_test: bool) -> BodyFacts {
        let mut ctx = BodyCtx::new(is_test);
        for p in params {
            ctx.declare(&p.name, Some(p.type_name.clone()));
        }
        self.scan(body, &mut ctx);
        self.finish_body(body, &mut ctx);
        ctx.facts
    }

    /// Sets `used` on locals: a name is used when it occurs in the body more
    /// often than it is declared there.
    fn finish_body(&self, body: Node, ctx: &mut BodyCtx) {
        let mut counts: HashMap<&str, usize> = HashMap::new();
        let mut stack = vec![body];
        while let Some(node) = stack.pop() {
            if node.kind() == "identifier" {
                *counts.entry(self.text(node)).or_default() += 1;
            }
            stack.extend(children(node));
        }
        let mut decls: HashMap<String, usize> = HashMap::new();
        for v in &ctx.facts.local_vars {
            *decls.entry(v.name.clone()).or_default() += 1;
        }
        for v in &mut ctx.facts.local_vars {
            v.used = counts.get(v.name.as_str()).copied().unwrap_or(0) > decls[&v.name];
        }
    }

    fn field_type(&self, name: &str) -> Option<String> {
        self.type_stack
            .iter()
            .rev()
            .find_map(|t| t.fields.get(name).cloned())
    }

    fn var_type(&self, ctx: &BodyCtx, name: &str) -> Option<Option<String>> {
        match ctx.lookup(name) {
            Some(t) => Some(t.clone()),
            None => self.field_type(name).map(Some),
        }
    }

    fn add_local(
        &self,
        ctx: &mut BodyCtx,
        name_node: Node,
        type_name: Option<String>,
        kind: LocalKind,
    ) {
        let name = self.text(name_node).to_string();
        ctx.declare(&name, type_name.clone());
        ctx.facts.local_vars.push(LocalVar {
            name,
            type_name,
            line: line_of(name_node),
            kind,
            used: false,
        });
    }

    fn scan(&mut self, node: Node, ctx: &mut BodyCtx) {
        match node.kind() {
            "line_comment" | "block_comment" => {}
            "block" | "switch_block" | "constructor_body" => {
                ctx.scopes.push(HashMap::new());
                self.scan_children(node, ctx);
                ctx.scopes.pop();
            }
            "local_variable_declaration" => self.local_declaration(node, ctx, LocalKind::Local),
            "enhanced_for_statement" => {
                self.push_loop(node, ctx, LoopKind::ForEach);
                if let Some(v) = node.child_by_field_name("value") {
                    self.scan(v, ctx);
                }
                ctx.scopes.push(HashMap::new());
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = node
                        .child_by_field_name("type")
                        .map(|t| erase(self.text(t)));
                    let ty = ty.filter(|t| t != "var");
                    self.add_local(ctx, name, ty, LocalKind::ForEach);
                }
                ctx.loop_depth += 1;
                if let Some(body) = node.child_by_field_name("body") {
                    self.scan(body, ctx);
                }
                ctx.loop_depth -= 1;
                ctx.scopes.pop();
            }
            "for_statement" => {
                self.push_loop(node, ctx, LoopKind::For);
                ctx.scopes.push(HashMap::new());
                ctx.loop_depth += 1;
                self.scan_children(node, ctx);
                ctx.loop_depth -= 1;
                ctx.scopes.pop();
            }
            "while_statement" | "do_statement" => {
                let kind = if node.kind() == "while_statement" {
                    LoopKind::While
                } else {
                    LoopKind::DoWhile
                };
                self.push_loop(node, ctx, kind);
                ctx.loop_depth += 1;
                self.scan_children(node, ctx);
                ctx.loop_depth -= 1;
            }
            "catch_clause" => self.catch_clause(node, ctx),
            "resource" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = node
                        .child_by_field_name("type")
                        .map(|t| erase(self.text(t)));
                    self.add_local(ctx, name, ty.filter(|t| t != "var"), LocalKind::Resource);
                }
                self.scan_children(node, ctx);
            }
            "lambda_expression" => {
                ctx.scopes.push(HashMap::new());
                if let Some(params) = node.child_by_field_name("parameters") {
                    match params.kind() {
                        "identifier" => self.add_local(ctx, params, None, LocalKind::Lambda),
                        "formal_parameters" => {
                            for p in self.params(Some(params)) {
                                ctx.declare(&p.name, Some(p.type_name.clone()));
                                ctx.facts.local_vars.push(LocalVar {
                                    name: p.name,
                                    type_name: Some(p.type_name),
                                    line: p.line,
                                    kind: LocalKind::Lambda,
                                    used: false,
                                });
                            }
                        }
                        _ => {
                            for id in named_children(params) {
                                if id.kind() == "identifier" {
                                    self.add_local(ctx, id, None, LocalKind::Lambda);
                                }
                            }
                        }
                    }
                }
                if let Some(body) = node.child_by_field_name("body") {
                    self.scan(body, ctx);
                }
                ctx.scopes.pop();
            }
            "instanceof_expression" => {
                self.scan_children(node, ctx);
                if let Some(name) = node.child_by_field_name("name") {
                    let ty = node
                        .child_by_field_name("right")
                        .map(|t| erase(self.text(t)));
                    self.add_local(ctx, name, ty, LocalKind::Pattern);
                }
            }
            "assignment_expression" => {
                if ctx.loop_depth > 0 {
                    self.concat_site(node, ctx);
                }
                self.scan_children(node, ctx);
            }
            "method_invocation" => {
                if let Some(name) = node.child_by_field_name("name") {
                    let (form, receiver) = match node.child_by_field_name("object") {
                        Some(obj) => self.classify_receiver(obj, ctx),
                        None => (ReceiverForm::Implicit, None),
                    };
                    ctx.facts.member_accesses.push(AccessFact {
                        line: line_of(name),
                        member_name: self.text(name).to_string(),
                        receiver_form: form,
                        receiver_type_name: receiver,
                        is_call: true,
                    });
                }
                self.scan_children(node, ctx);
            }
            "field_access" => {
                if let (Some(obj), Some(field)) = (
                    node.child_by_field_name("object"),
                    node.child_by_field_name("field"),
                ) {
                    let (form, receiver) = self.classify_receiver(obj, ctx);
                    ctx.facts.member_accesses.push(AccessFact {
                        line: line_of(field),
                        member_name: self.text(field).to_string(),
                        receiver_form: form,
                        receiver_type_name: receiver,
                        is_call: false,
                    });
                }
                self.scan_children(node, ctx);
            }
            "class_declaration"
            | "interface_declaration"
            | "enum_declaration"
            | "record_declaration" => {
                let enclosing = self.type_stack.last().map(|t| t.index);
                self.collect_type(node, enclosing, true);
            }
            "method_declaration" | "constructor_declaration" => {
                // members of anonymous classes
                let name = node
                    .child_by_field_name("name")
                    .map(|n| self.text(n).to_string())
                    .unwrap_or_default();
                let mods = self.modifiers(node);
                let params = self.params(node.child_by_field_name("parameters"));
                ctx.scopes.push(HashMap::new());
                for p in &params {
                    ctx.declare(&p.name, Some(p.type_name.clone()));
                }
                let saved_depth = std::mem::take(&mut ctx.loop_depth);
                let saved_test = ctx.is_test;
                ctx.is_test |= is_test_method(&name, &mods.annotations);
                if let Some(body) = node.child_by_field_name("body") {
                    self.scan(body, ctx);
                }
                ctx.is_test = saved_test;
                ctx.loop_depth = saved_depth;
                ctx.scopes.pop();
            }
            _ => self.scan_children(node, ctx),
        }
    }

    fn scan_children(&mut self, node: Node, ctx: &mut BodyCtx) {
        for child in named_children(node) {
            self.scan(child, ctx);
        }
    }

    fn push_loop(&self, node: Node, ctx: &mut BodyCtx, kind: LoopKind) {
        ctx.facts.loops.push(LoopFact {
            kind,
            line: line_of(node),
            end_line: end_line_of(node),
        });
    }

    fn local_declaration(&mut self, node: Node, ctx: &mut BodyCtx, kind: LocalKind) {
        let ty_node = node.child_by_field_name("type");
        let declared = ty_node.map(|t| erase(self.text(t)));
        for decl in named_children(node) {
            if decl.kind() != "variable_declarator" {
                continue;
            }
            let value = decl.child_by_field_name("value");
            if let Some(v) = value {
                self.scan(v, ctx);
            }
            let Some(name) = decl.child_by_field_name("name") else {
                continue;
            };
            let mut ty = declared.clone();
            if ty.as_deref() == Some("var") {
                ty = value
                    .filter(|v| v.kind() == "object_creation_expression")
                    .and_then(|v| v.child_by_field_name("type"))
                    .map(|t| erase(self.text(t)));
            } else if let (Some(t), Some(d)) = (ty.as_mut(), decl.child_by_field_name("dimensions"))
            {
                t.push_str(&"[]".repeat(self.text(d).matches('[').count()));
            }
            self.add_local(ctx, name, ty, kind);
        }
    }

    fn catch_clause(&mut self, node: Node, ctx: &mut BodyCtx) {
        let param = named_children(node)
            .into_iter()
            .find(|c| c.kind() == "catch_formal_parameter");
        let body = node.child_by_field_name("body");
        let name_node = param.and_then(|p| p.child_by_field_name("name"));
        let exception_var_name = name_node
            .map(|n| self.text(n).to_string())
            .unwrap_or_default();
        let (is_body_empty, has_comment) = match body {
            Some(b) => {
                let kids = named_children(b);
                (
                    kids.iter().all(|k| is_comment(*k)),
                    kids.iter().any(|k| is_comment(*k)),
                )
            }
            None => (true, false),
        };
        ctx.facts.catches.push(CatchFact {
            line: line_of(node),
            exception_var_name,
            is_body_empty,
            has_comment,
            enclosing_method_is_test: ctx.is_test,
        });
        ctx.scopes.push(HashMap::new());
        if let Some(name) = name_node {
            let ty = param
                .and_then(|p| {
                    named_children(p)
                        .into_iter()
                        .find(|c| c.kind() == "catch_type")
                })
                .and_then(|ct| {
                    let types: Vec<_> = named_children(ct)
                        .into_iter()
                        .filter(|c| !is_comment(*c))
                        .collect();
                    (types.len() == 1).then(|| erase(self.text(types[0])))
                });
            self.add_local(ctx, name, ty, LocalKind::Catch);
        }
        if let Some(b) = body {
            self.scan(b, ctx);
        }
        ctx.scopes.pop();
    }

    /// `s += x` and `s = s + x` inside a loop.
    fn concat_site(&self, node: Node, ctx: &mut BodyCtx) {
        let (Some(left), Some(op), Some(right)) = (
            node.child_by_field_name("left"),
            node.child_by_field_name("operator"),
            node.child_by_field_name("right"),
        ) else {
            return;
        };
        let target = match left.kind() {
            "identifier" => Some((self.text(left).to_string(), false)),
            "field_access" => {
                let obj = left.child_by_field_name("object");
                let field = left.child_by_field_name("field");
                match (obj, field) {
                    (Some(o), Some(f)) if o.kind() == "this" => {
                        Some((self.text(f).to_string(), true))
                    }
                    _ => None,
                }
            }
            _ => None,
        };
        let Some((name, via_this)) = target else {
            return;
        };
        let is_concat = match self.text(op) {
            "+=" => true,
            "=" => {
                let mut operand = right;
                while operand.kind() == "binary_expression"
                    && operand
                        .child_by_field_name("operator")
                        .map(|o| self.text(o))
                        == Some("+")
                {
                    match operand.child_by_field_name("left") {
                        Some(l) => operand = l,
                        None => break,
                    }
                }
                operand.id() != right.id() && self.text(operand) == self.text(left)
            }
            _ => false,
        };
        if !is_concat {
            return;
        }
        let target_type_name = if via_this {
            self.field_type(&name)
        } else {
            self.var_type(ctx, &name).flatten()
        };
        ctx.facts.string_concat_sites.push(ConcatSite {
            line: line_of(node),
            target_var_name: name,
            target_type_name,
        });
    }

    fn classify_receiver(&self, obj: Node, ctx: &BodyCtx) -> (ReceiverForm, Option<String>) {
        match obj.kind() {
            "identifier" => {
                let name = self.text(obj);
                match self.var_type(ctx, name) {
                    Some(ty) => (ReceiverForm::InstanceExpr, ty),
                    None if name.starts_with(|c: char| c.is_ascii_uppercase()) => {
                        (ReceiverForm::ClassName, Some(name.to_string()))
                    }
                    None => (ReceiverForm::InstanceExpr, None),
                }
            }
            "this" => (
                ReceiverForm::InstanceExpr,
                self.type_stack.last().map(|t| t.simple_name.clone()),
            ),
            "field_access" => {
                let inner = obj.child_by_field_name("object");
                let field = obj.child_by_field_name("field");
                if let (Some(inner), Some(field)) = (inner, field) {
                    if inner.kind() == "this" {
                        return (
                            ReceiverForm::InstanceExpr,
                            self.field_type(self.text(field)),
                        );
                    }
                }
                let text: String = self.text(obj).split_whitespace().collect();
                let segments: Vec<&str> = text.split('.').collect();
                let is_name_chain = segments.iter().all(|s| {
                    !s.is_empty()
                        && s.chars()
                            .all(|c| c.is_alphanumeric() || c == '_' || c == '$')
                });
                let first_is_var = self.var_type(ctx, segments[0]).is_some();
                let last_upper = segments
                    .last()
                    .is_some_and(|s| s.starts_with(|c: char| c.is_ascii_uppercase()));
                if is_name_chain && !first_is_var && last_upper {
                    (ReceiverForm::ClassName, Some(text))
                } else {
                    (ReceiverForm::InstanceExpr, None)
                }
            }
            "method_invocation" => {
                let implicit = match obj.child_by_field_name("object") {
                    None => true,
                    Some(o) => o.kind() == "this",
                };
                let ty = if implicit {
                    obj.child_by_field_name("name")
                        .and_then(|n| self.method_returns.get(self.text(n)).cloned().flatten())
                        .filter(|t| t != "void")
                } else {
                    None
                };
                (ReceiverForm::MethodReturn, ty)
            }
            "object_creation_expression" => (
                ReceiverForm::InstanceExpr,
                obj.child_by_field_name("type").map(|t| erase(self.text(t))),
            ),
            "cast_expression" => (
                ReceiverForm::InstanceExpr,
                obj.child_by_field_name("type").map(|t| erase(self.text(t))),
            ),
            "parenthesized_expression" => {
                match named_children(obj).into_iter().find(|c| !is_comment(*c)) {
                    Some(inner) => self.classify_receiver(inner, ctx),
                    None => (ReceiverForm::InstanceExpr, None),
                }
            }
            "string_literal" => (ReceiverForm::InstanceExpr, Some("String".into())),
            _ => (ReceiverForm::InstanceExpr, None),
        }
    }
}

fn inner_type_member(t: &TypeFact) -> MemberFact {
    MemberFact {
        kind: MemberKind::InnerType,
        name: t.name.clone(),
        visibility: t.visibility,
        line: t.line,
        end_line: t.end_line,
        is_final: false,
        is_static_final: false,
        is_abstract: false,
        javadoc: None,
        annotations: Vec::new(),
        params: Vec::new(),
        type_params: Vec::new(),
        return_type_name: None,
        field_type_name: None,
        thrown_types: Vec::new(),
        body: None,
        used: true,
    }
}

fn is_test_method(name: &str, annotations: &[String]) -> bool {
    name.starts_with("test") || annotations.iter().any(|a| a == "Test")
}

fn contains_word(text: &str, word: &str) -> bool {
    if word.is_empty() {
        return false;
    }
    let is_ident = |c: char| c.is_alphanumeric() || c == '_' || c == '$';
    text.match_indices(word).any(|(i, _)| {
        let before = text[..i].chars().next_back();
        let after = text[i + word.len()..].chars().next();
        !before.is_some_and(is_ident) && !after.is_some_and(is_ident)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> SourceFileModel {
        parse_compilation_unit(src, "src/main/java/T.java").expect("parses")
    }

    #[test]
    fn minimal_class() {
        let m = parse("public class Customer {}");
        assert_eq!(m.types.len(), 1);
        let t = &m.types[0];
        assert_eq!(t.name, "Customer");
        assert_eq!(t.kind, TypeKind::Class);
        assert_eq!(t.visibility, Visibility::Public);
        assert!(t.members.is_empty());
        assert!(!t.is_nested);
    }

    #[test]
    fn commented_empty_catch() {
        let src = r#"
class Parser {
  void read(String input) {
    try {
      int value = Integer.parseInt(input);
      processNumber(value);
    } catch (NumberFormatException ok) {
      // Non-numeric input is expected; continue normally
    }
  }
  void processNumber(int v) {}
}"#;
        let m = parse(src);
        let body = m.types[0].members[0].body.as_ref().unwrap();
        assert_eq!(body.catches.len(), 1);
        let c = &body.catches[0];
        assert!(c.is_body_empty);
        assert!(c.has_comment);
        assert_eq!(c.exception_var_name, "ok");
        assert!(!c.enclosing_method_is_test);
    }

    #[test]
    fn syntax_error_reports_line() {
        let src = "class A {\n  void f(String input) {\n    int value = Integer.parseInt(input);\n    ))garbage((\n  }\n}\n";
        let err = parse_compilation_unit(src, "A.java").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(err.path, "A.java");
    }

    #[test]
    fn members_in_declaration_order() {
        let src = r#"
class A {
  static class Inner {}
  private static final int MAX = 1, MIN = 0;
  int count;
  A() {}
  static void helper() {}
  void work() {}
}"#;
        let m = parse(src);
        let outer = &m.types[0];
        let kinds: Vec<_> = outer.members.iter().map(|m| m.kind).collect();
        assert_eq!(
            kinds,
            vec![
                MemberKind::InnerType,
                MemberKind::StaticField,
                MemberKind::StaticField,
                MemberKind::InstanceField,
                MemberKind::Constructor,
                MemberKind::StaticMethod,
                MemberKind::InstanceMethod,
            ]
        );
        assert!(outer.members[1].is_static_final);
        assert_eq!(m.types[1].name, "Inner");
        assert!(m.types[1].is_nested);
        assert_eq!(m.types[1].qualified_name, "A.Inner");
        assert!(outer.members.windows(2).all(|w| w[0].line <= w[1].line));
    }

    #[test]
    fn interface_members_are_implicitly_public() {
        let m = parse("interface Shape { int SIDES = 3; double area(); default String label() { return \"s\"; } }");
        let t = &m.types[0];
        assert_eq!(t.members[0].kind, MemberKind::StaticField);
        assert!(t.members[0].is_static_final);
        assert_eq!(t.members[0].visibility, Visibility::Public);
        assert!(t.members[1].is_abstract);
        assert_eq!(t.members[1].visibility, Visibility::Public);
        assert!(!t.members[2].is_abstract);
    }

    #[test]
    fn javadoc_attaches_to_following_declaration() {
        let src = r#"
/** The customer entity for billing. */
@Deprecated
public class Customer {
  /** Count of orders. */
  private int orders;

  // not a javadoc
  public void pay() {}
}"#;
        let m = parse(src);
        let t = &m.types[0];
        assert_eq!(t.javadoc.as_ref().unwrap().word_count, 5);
        assert_eq!(t.annotations, vec!["Deprecated"]);
        assert_eq!(t.members[0].javadoc.as_ref().unwrap().word_count, 3);
        assert!(t.members[1].javadoc.is_none());
    }

    #[test]
    fn string_concat_in_loop() {
        let src = r#"
class A {
  String f() {
    String result = "";
    for (int i = 0; i < 50000; i++) {
      result += i + " ";
    }
    result += "end";
    return result;
  }
}"#;
        let m = parse(src);
        let body = m.types[0].members[0].body.as_ref().unwrap();
        assert_eq!(body.loops.len(), 1);
        assert_eq!(body.string_concat_sites.len(), 1);
        let site = &body.string_concat_sites[0];
        assert_eq!(site.target_var_name, "result");
        assert_eq!(site.target_type_name.as_deref(), Some("String"));
        let lp = &body.loops[0];
        assert!(lp.line <= site.line && site.line <= lp.end_line);
    }

    #[test]
    fn self_concatenation_assignment() {
        let src = "class A { String s; void f(int[] xs) { while (true) { s = s + xs[0] + \"x\"; s = \"x\" + s; } } }";
        let m = parse(src);
        let body = m.types[0].members[1].body.as_ref().unwrap();
        assert_eq!(body.string_concat_sites.len(), 1);
        assert_eq!(
            body.string_concat_sites[0].target_type_name.as_deref(),
            Some("String")
        );
    }

    #[test]
    fn receiver_forms() {
        let src = r#"
class A {
  Utils utilInstance;
  Utils getUtils() { return utilInstance; }
  void f() {
    Utils.doWork();
    utilInstance.doWork();
    getUtils().doWork();
    helper();
    this.utilInstance.doWork();
    java.util.Collections.emptyList();
  }
  void helper() {}
}"#;
        let m = parse(src);
        let body = m.types[0].members[2].body.as_ref().unwrap();
        let forms: Vec<_> = body
            .member_accesses
            .iter()
            .map(|a| {
                (
                    a.member_name.as_str(),
                    a.receiver_form,
                    a.receiver_type_name.as_deref(),
                )
            })
            .collect();
        assert!(forms.contains(&("doWork", ReceiverForm::ClassName, Some("Utils"))));
        assert!(forms.contains(&("doWork", ReceiverForm::InstanceExpr, Some("Utils"))));
        assert!(forms.contains(&("doWork", ReceiverForm::MethodReturn, Some("Utils"))));
        assert!(forms.contains(&("helper", ReceiverForm::Implicit, None)));
        assert!(forms.contains(&(
            "emptyList",
            ReceiverForm::ClassName,
            Some("java.util.Collections")
        )));
        assert_eq!(
            forms
                .iter()
                .filter(|f| f.0 == "doWork" && f.1 == ReceiverForm::InstanceExpr)
                .count(),
            2
        );
    }

    #[test]
    fn locals_usage_and_imports() {
        let src = r#"
import java.util.List;
import java.util.Map;
import java.io.*;
import static java.lang.Math.max;

/** See {@link Map}. */
class A {
  private int unusedField;
  private int usedField;
  private void unusedHelper() {}
  int f(List<String> xs) {
    int unused = 0;
    int used = xs.size();
    return used + usedField;
  }
}"#;
        let m = parse(src);
        let used: Vec<_> = m
            .imports
            .iter()
            .map(|i| (i.simple_name().to_string(), i.used))
            .collect();
        assert_eq!(
            used,
            vec![
                ("List".into(), true),
                ("Map".into(), true),
                ("io".into(), true),
                ("max".into(), false)
            ]
        );
        assert!(m.imports[2].is_wildcard);
        assert!(m.imports[3].is_static);
        let t = &m.types[0];
        assert!(!t.members[0].used);
        assert!(t.members[1].used);
        assert!(!t.members[2].used);
        let locals = &t.members[3].body.as_ref().unwrap().local_vars;
        assert_eq!(locals.len(), 2);
        assert!(!locals[0].used);
        assert!(locals[1].used);
    }

    #[test]
    fn test_method_detection() {
        let src = r#"
class StackTest {
  @Test void pops() {
    try { emptyStack.pop(); fail(); } catch (NoSuchElementException expected) {}
  }
  void testPush() { try { x(); } catch (Exception e) {} }
  void other() { try { x(); } catch (Exception e) { log(e); } }
}"#;
        let m = parse(src);
        let catches: Vec<_> = m.types[0]
            .members
            .iter()
            .flat_map(|mm| mm.body.as_ref().unwrap().catches.clone())
            .collect();
        assert_eq!(catches.len(), 3);
        assert!(
            catches[0].enclosing_method_is_test
                && catches[0].is_body_empty
                && !catches[0].has_comment
        );
        assert!(catches[1].enclosing_method_is_test);
        assert!(!catches[2].enclosing_method_is_test && !catches[2].is_body_empty);
    }

    #[test]
    fn enums_records_and_hierarchy() {
        let src = r#"
package org.x;
public enum Color implements Named, java.io.Serializable {
  RED, GREEN;
  private final int code = 1;
  Color() {}
  public String label() { return name(); }
}
record Point(int x, int y) implements Comparable<Point> {
  Point { if (x < 0) throw new IllegalArgumentException(); }
}
class B extends org.x.Base<String> {}
"#;
        let m = parse(src);
        assert_eq!(m.package.as_ref().unwrap().name, "org.x");
        let e = &m.types[0];
        assert_eq!(e.kind, TypeKind::Enum);
        assert_eq!(e.interfaces, vec!["Named", "java.io.Serializable"]);
        assert_eq!(e.members[1].visibility, Visibility::Private);
        let r = &m.types[1];
        assert_eq!(r.kind, TypeKind::Record);
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.interfaces, vec!["Comparable"]);
        assert_eq!(r.members[0].kind, MemberKind::Constructor);
        assert_eq!(m.types[2].superclass.as_deref(), Some("org.x.Base"));
    }

    #[test]
    fn params_and_signatures() {
        let src = "class A { public <T> java.util.List<T> f(final int a, String[] b, Object... rest) throws java.io.IOException, E { return null; } }";
        let m = parse(src);
        let f = &m.types[0].members[0];
        let types: Vec<_> = f.params.iter().map(|p| p.type_name.as_str()).collect();
        assert_eq!(types, vec!["int", "String[]", "Object[]"]);
        assert_eq!(f.return_type_name.as_deref(), Some("List"));
        assert_eq!(f.thrown_types, vec!["IOException", "E"]);
        assert_eq!(f.type_params, vec!["T"]);
    }

    #[test]
    fn lambda_and_anonymous_bodies_are_scanned() {
        let src = r#"
class A {
  void f(java.util.List<String> xs) {
    xs.forEach(x -> { try { g(x); } catch (Exception e) {} });
    Runnable r = new Runnable() {
      public void run() { for (String s : xs) { } }
    };
  }
  void g(String s) {}
}"#;
        let m = parse(src);
        let body = m.types[0].members[0].body.as_ref().unwrap();
        assert_eq!(body.catches.len(), 1);
        assert_eq!(body.loops.len(), 1);
    }

    #[test]
    fn local_classes_become_nested_types() {
        let src = "class A { void f() { class Local { void g() {} } } }";
        let m = parse(src);
        assert_eq!(m.types.len(), 2);
        assert!(m.types[1].is_local);
        assert_eq!(m.types[1].members.len(), 1);
        assert_eq!(m.types[1].enclosing, Some(0));
        assert_eq!(m.types[0].members.len(), 1);
    }

    #[test]
    fn comments_are_collected() {
        let m = parse("// a\n/* b\n c */\n/** d */\nclass A {}\n");
        assert_eq!(m.comments.len(), 3);
        assert_eq!((m.comments[1].start_line, m.comments[1].end_line), (2, 3));
        assert!(m.comments[2].is_javadoc);
        assert!(!m.comments[1].is_javadoc);
        assert_eq!(m.line_count, 5);
    }

    #[test]
    fn parses_as_code_distinguishes_prose() {
        assert!(parses_as_code("int oldCount = 0;"));
        assert!(parses_as_code("foo.bar(baz);"));
        assert!(parses_as_code("import java.util.List;"));
        assert!(parses_as_code("private int x;"));
        assert!(!parses_as_code(
            "Non-numeric input is expected; continue normally"
        ));
        assert!(!parses_as_code("TODO: fix this;"));
        assert!(!parses_as_code(
            "Licensed under the Apache License, Version 2.0 (the \"License\");"
        ));
    }

    #[test]
    fn type_erasure() {
        assert_eq!(erase("java.util.Map.Entry<K, V>[]"), "Entry[]");
        assert_eq!(erase("@Nullable String"), "String");
        assert_eq!(type_ref("org.x.Base<java.util.List<String>>"), "org.x.Base");
    }

    #[test]
    fn round_trip_stability() {
        let src = "class A { int x; void f() { for (;;) { x++; } } }";
        assert_eq!(parse(src), parse(src));
    }
}
