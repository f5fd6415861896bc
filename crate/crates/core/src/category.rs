use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Violation categories. Declaration order is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Category {
    ClassNames,
    MethodNames,
    VariableNames,
    PackageNames,
    JavadocFormatting,
    JavadocClass,
    JavadocConstructor,
    JavadocMethod,
    JavadocField,
    PrivateInstances,
    Useless,
    StringConcatenation,
    MissingOverride,
    EmptyCatchBlock,
    UnqualifiedStaticAccess,
    FinalizeOverride,
    Ordering,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Group {
    CodeStyle,
    ProgrammingPractices,
}

impl Category {
    pub const ALL: [Category; 17] = [
        Category::ClassNames,
        Category::MethodNames,
        Category::VariableNames,
        Category::PackageNames,
        Category::JavadocFormatting,
        Category::JavadocClass,
        Category::JavadocConstructor,
        Category::JavadocMethod,
        Category::JavadocField,
        Category::PrivateInstances,
        Category::Useless,
        Category::StringConcatenation,
        Category::MissingOverride,
        Category::EmptyCatchBlock,
        Category::UnqualifiedStaticAccess,
        Category::FinalizeOverride,
        Category::Ordering,
    ];

    /// Categories contributing to the total score and adherence groups.
    pub fn scored() -> impl Iterator<Item = Category> {
        Category::ALL.into_iter().filter(|c| c.group().is_some())
    }

    /// Whether the Google guide itself defines the rule.
    pub fn in_google_guide(self) -> bool {
        !matches!(
            self,
            Category::PrivateInstances
                | Category::Useless
                | Category::StringConcatenation
                | Category::Ordering
        )
    }

    pub fn is_javadoc(self) -> bool {
        matches!(
            self,
            Category::JavadocFormatting
                | Category::JavadocClass
                | Category::JavadocConstructor
                | Category::JavadocMethod
                | Category::JavadocField
        )
    }

    /// Categories that decide adherence: guide rules other than Javadoc,
    /// whose frequency says little about style discipline.
    pub fn decides_adherence(self) -> bool {
        self.in_google_guide() && !self.is_javadoc()
    }

    pub fn id(self) -> &'static str {
        match self {
            Category::ClassNames => "ClassNames",
            Category::MethodNames => "MethodNames",
            Category::VariableNames => "VariableNames",
            Category::PackageNames => "PackageNames",
            Category::JavadocFormatting => "JavadocFormatting",
            Category::JavadocClass => "JavadocClass",
            Category::JavadocConstructor => "JavadocConstructor",
            Category::JavadocMethod => "JavadocMethod",
            Category::JavadocField => "JavadocField",
            Category::PrivateInstances => "PrivateInstances",
            Category::Useless => "Useless",
            Category::StringConcatenation => "StringConcatenation",
            Category::MissingOverride => "MissingOverride",
            Category::EmptyCatchBlock => "EmptyCatchBlock",
            Category::UnqualifiedStaticAccess => "UnqualifiedStaticAccess",
            Category::FinalizeOverride => "FinalizeOverride",
            Category::Ordering => "Ordering",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Category::ClassNames => "Class Names",
            Category::MethodNames => "Method Names",
            Category::VariableNames => "Variable Names",
            Category::PackageNames => "Package Names",
            Category::JavadocFormatting => "Javadoc Formatting",
            Category::JavadocClass => "Class Javadocs",
            Category::JavadocConstructor => "Constructor Javadocs",
            Category::JavadocMethod => "Method Javadocs",
            Category::JavadocField => "Field Javadocs",
            Category::PrivateInstances => "Private Instances",
            Category::Useless => "Useless",
            Category::StringConcatenation => "String Concatenation",
            Category::MissingOverride => "Missing Override",
            Category::EmptyCatchBlock => "Empty Catch Block",
            Category::UnqualifiedStaticAccess => "Unqualified Static Access",
            Category::FinalizeOverride => "Finalize Override",
            Category::Ordering => "Ordering",
        }
    }

    /// `None` for ordering, which is reported but not part of adherence.
    pub fn group(self) -> Option<Group> {
        use Category::*;
        match self {
            ClassNames | MethodNames | VariableNames | PackageNames | JavadocFormatting
            | JavadocClass | JavadocConstructor | JavadocMethod | JavadocField => {
                Some(Group::CodeStyle)
            }
            PrivateInstances
            | Useless
            | StringConcatenation
            | MissingOverride
            | EmptyCatchBlock
            | UnqualifiedStaticAccess
            | FinalizeOverride => Some(Group::ProgrammingPractices),
            Ordering => None,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown category `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub category: Category,
    pub file_path: String,
    pub line: usize,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Violation {
    pub fn new(
        category: Category,
        file_path: &str,
        line: usize,
        message: impl Into<String>,
    ) -> Self {
        Violation {
            category,
            file_path: file_path.to_string(),
            line: line.max(1),
            message: message.into(),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// `path:line`, as printed in reports.
    pub fn anchor(&self) -> String {
        format!("{}:{}", self.file_path, self.line)
    }
}
