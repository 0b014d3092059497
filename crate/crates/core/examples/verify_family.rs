//! Checks every prediction against direct computation over a ring family,
//! storing rows in a ledger so a second run reuses them.

use pisgraph::harness::{verify, Budgets, FamilyConfig, Ledger};
use pisgraph::ring::Family;

fn main() {
    let cfg = FamilyConfig {
        templates: vec![
            Family::Field,
            Family::Chain { k: 1 },
            Family::Chain { k: 2 },
            Family::Chain { k: 3 },
            Family::TwogenFlat { q: 2 },
            Family::TwogenXy { q: 2 },
        ],
        n_max: 4,
        max_vertices: 30,
        budgets: Budgets::default(),
        workers: 0,
    };
    let path = std::env::temp_dir().join("pisgraph-example-ledger.jsonl");
    let ledger = Ledger::new(&path);
    let report = verify(&cfg, Some(&ledger)).expect("valid config");
    print!("{}", report.table());
    println!("{} rows reused from {}", report.summary.reused, path.display());
    for (field, n) in &report.summary.refuted {
        println!("refuted {field}: {n} rings");
    }
}
