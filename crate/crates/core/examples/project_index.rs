//! Builds the cross-file type index and resolves overrides and static
//! accesses that a single file cannot decide.

use javastyle::checks::{check_missing_override, check_unqualified_static};
use javastyle::index::ProjectIndex;
use javastyle::parse::parse_compilation_unit;

const FILES: [(&str, &str); 3] = [
    (
        "src/main/java/org/demo/Task.java",
        "package org.demo;\n\npublic class Task {\n  public void run() {}\n  public static Task idle() { return new Task(); }\n}\n",
    ),
    (
        "src/main/java/org/demo/PrintTask.java",
        "package org.demo;\n\npublic class PrintTask extends Task {\n  public void run() {}\n}\n",
    ),
    (
        "src/main/java/org/demo/Runner.java",
        "package org.demo;\n\npublic class Runner {\n  void start(Task task) {\n    task.idle();\n    Task.idle();\n  }\n}\n",
    ),
];

fn main() {
    let models: Vec<_> = FILES
        .iter()
        .map(|(path, src)| parse_compilation_unit(src, path).unwrap())
        .collect();
    let index = ProjectIndex::build(&models);
    for entry in index.entries() {
        println!(
            "{} ({:?}) supertypes={:?}",
            entry.fqn, entry.kind, entry.supertypes
        );
    }
    for file in 0..models.len() {
        let found = check_missing_override(&models, file, &index)
            .into_iter()
            .chain(check_unqualified_static(&models, file, &index));
        for v in found {
            println!("{} {}: {}", v.anchor(), v.category, v.message);
        }
    }
}
