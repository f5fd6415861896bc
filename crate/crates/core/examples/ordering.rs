//! Checks one class against each built-in member ordering.

use javastyle::checks::{check_ordering, OrderingConfig};
use javastyle::parse::parse_compilation_unit;

const SOURCE: &str = r#"
package org.demo;

class Cache {
  private int size;

  Cache() {}

  static final int LIMIT = 10;

  static Cache create() { return new Cache(); }

  void clear() {}
}
"#;

fn main() {
    let model = parse_compilation_unit(SOURCE, "src/main/java/org/demo/Cache.java").unwrap();
    for id in 1..=4 {
        let cfg = OrderingConfig::builtin(id).unwrap();
        let found = check_ordering(&model, &cfg);
        println!(
            "ordering {id} {:?}: {} out of place",
            cfg.ranked_groups,
            found.len()
        );
        for v in found {
            println!("  {}: {}", v.anchor(), v.message);
        }
    }
}
