//! Splits identifiers into words and tags each word with its lexical
//! categories, then runs the naming checks over a small class.

use javastyle::checks::{check_class_names, check_method_names};
use javastyle::lexicon::{classify_word, split_identifier, Lexicon};
use javastyle::parse::parse_compilation_unit;

const SOURCE: &str = r#"
package org.demo;

class ReportBuilder {
  void build() {}
  void quickly() {}
  void getHTTPResponse() {}
}

class Running {}
"#;

fn main() {
    let lexicon = Lexicon::bundled();
    for name in [
        "getHTTPResponse",
        "parseXml2Json",
        "MAX_RETRY_COUNT",
        "ReportBuilder",
    ] {
        let split = split_identifier(name);
        let tagged: Vec<String> = split
            .words
            .iter()
            .map(|w| {
                let tags: String = classify_word(w, lexicon)
                    .iter()
                    .map(|c| c.letter())
                    .collect();
                format!("{w}[{tags}]")
            })
            .collect();
        println!("{name:<18} {}", tagged.join(" "));
    }

    let model =
        parse_compilation_unit(SOURCE, "src/main/java/org/demo/ReportBuilder.java").unwrap();
    for v in check_class_names(&model, lexicon)
        .into_iter()
        .chain(check_method_names(&model, lexicon))
    {
        println!("{} {}: {}", v.anchor(), v.category, v.message);
    }
}
