use std::io::Write;

use pisgraph::harness::{verify, verify_ring, Budgets, FamilyConfig, HarnessError, Ledger, LedgerEntry};
use pisgraph::ring::{ring_of, Family};

fn entry(budget: u64) -> LedgerEntry {
    let ring = ring_of(&[Family::Field, Family::Chain { k: 1 }]).unwrap();
    let budgets = Budgets {
        genus: budget,
        crosscap: budget,
        subdivision: budget,
    };
    LedgerEntry {
        key: ring.canonical_key(),
        budgets,
        row: verify_ring(&ring, &budgets),
    }
}

#[test]
fn lookup_on_empty_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let l = Ledger::new(dir.path().join("ledger.jsonl"));
    let (found, errors) = l.lookup("anything").unwrap();
    assert!(found.is_none());
    assert!(errors.is_empty());
}

#[test]
fn append_then_lookup() {
    let dir = tempfile::tempdir().unwrap();
    let l = Ledger::new(dir.path().join("ledger.jsonl"));
    let e = entry(1000);
    l.append(&e).unwrap();
    assert_eq!(l.lookup(&e.key).unwrap().0, Some(e));
}

#[test]
fn larger_budget_wins() {
    let dir = tempfile::tempdir().unwrap();
    let l = Ledger::new(dir.path().join("ledger.jsonl"));
    let big = entry(5000);
    l.append(&big).unwrap();
    l.append(&entry(1000)).unwrap();
    assert_eq!(l.lookup(&big.key).unwrap().0.unwrap().budgets.genus, 5000);
    let exact = l.lookup_exact(&big.key, &entry(1000).budgets).unwrap().unwrap();
    assert_eq!(exact.budgets.genus, 1000);
}

#[test]
fn corrupt_lines_are_reported_and_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.jsonl");
    let l = Ledger::new(&path);
    let e = entry(1000);
    l.append(&e).unwrap();
    std::fs::OpenOptions::new()
        .append(true)
        .open(&path)
        .unwrap()
        .write_all(b"{not json\n")
        .unwrap();
    l.append(&entry(2000)).unwrap();
    let (found, errors) = l.lookup(&e.key).unwrap();
    assert_eq!(found.unwrap().budgets.genus, 2000);
    assert_eq!(errors.len(), 1);
    assert!(matches!(errors[0], HarnessError::CorruptLedger { line: 2, .. }));
}

#[test]
fn ledger_never_changes_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let l = Ledger::new(dir.path().join("ledger.jsonl"));
    let cfg = FamilyConfig {
        templates: vec![Family::Field, Family::Chain { k: 1 }, Family::Chain { k: 2 }],
        n_max: 3,
        max_vertices: 20,
        budgets: Budgets::default(),
        workers: 2,
    };
    let fresh = verify(&cfg, None).unwrap();
    let first = verify(&cfg, Some(&l)).unwrap();
    let second = verify(&cfg, Some(&l)).unwrap();
    assert_eq!(second.summary.reused, second.rows.len());
    for (a, b) in fresh.rows.iter().zip(second.rows.iter()).chain(fresh.rows.iter().zip(first.rows.iter())) {
        assert_eq!(a.key, b.key);
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.status, b.status);
        assert_eq!(a.computed, b.computed);
    }
    // a different budget does not reuse rows
    let mut other = cfg.clone();
    other.budgets.genus += 1;
    assert_eq!(verify(&other, Some(&l)).unwrap().summary.reused, 0);
}
