use std::path::Path;

use pisgraph::classifier::{PredictedProfile, Tri};
use pisgraph::harness::cli::{run_with, BuildOutput, FindOutput, SurfaceOutput};
use pisgraph::harness::VerificationReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["pisgraph"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

const FFF: &str = r#"{"factors": [{"family": "field"}, {"family": "field"}, {"family": "field"}]}"#;
const C1FF: &str = r#"{"factors": [{"family": "chain", "k": 1}, {"family": "field"}, {"family": "field"}]}"#;

#[test]
fn build_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "f4.json", &FFF.replace("]}", r#", {"family": "field"}]}"#));
    let dot = dir.path().join("g.dot");
    let (code, out, _) = run(&["build", &spec, "--json", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    let b: BuildOutput = serde_json::from_str(&out).unwrap();
    assert_eq!((b.stats.vertices, b.stats.edges), (14, 48));
    assert_eq!(serde_json::from_str::<BuildOutput>(&serde_json::to_string(&b).unwrap()).unwrap(), b);
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("graph PIS {"));
}

#[test]
fn classify_three_fields() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "ring_FFF.json", FFF);
    let (code, out, _) = run(&["classify", &spec, "--json"]);
    assert_eq!(code, 0);
    let p: PredictedProfile = serde_json::from_str(&out).unwrap();
    assert_eq!(p.split, Tri::Yes);
    assert_eq!(p.citations["split"], ["split.three_or_more_factors"]);
}

#[test]
fn genus_of_ring_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "ring_chain1_F_F.json", C1FF);
    let (code, out, _) = run(&["genus", &spec]);
    assert_eq!(code, 0);
    assert!(out.starts_with("genus 1\n"), "{out}");
    let (code, out, _) = run(&["genus", &spec, "--json"]);
    assert_eq!(code, 0);
    let s: SurfaceOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(s.value, Some(1));
    assert!(s.reports[0].embedding().is_some());
}

#[test]
fn crosscap_of_k7_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    for u in 0..7 {
        for v in u + 1..7 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let path = write(dir.path(), "k7.g", &text);
    let (code, out, _) = run(&["crosscap", "--graph", &path, "--budget", "100000000"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("crosscap 3\n"), "{out}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let spec = FFF.replace("]}", r#", {"family": "field"}]}"#);
    let (code, out, _) = run(&["crosscap", &spec, "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(out.starts_with("crosscap in ["), "{out}");
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["build", "/no/such/file.json"]).0, 2);
    assert_eq!(run(&["classify", r#"{"factors": [{"family": "chain", "k": -1}]}"#]).0, 2);
    assert_eq!(run(&["find", FFF, "--pattern", "K9"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.g", "0 1\n2 3\n0 2\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n8 4\n8 5\n8 6\n8 7\n");
    // disconnected, with a nonplanar component: unsupported
    let path = write(dir.path(), "disc.g", "0 1\n2 3\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n4 6\n5 6\n");
    assert_eq!(run(&["crosscap", "--graph", &path]).0, 2);
    // genus sums over components
    let (code, out, _) = run(&["genus", "--graph", &path]);
    assert_eq!(code, 0);
    assert!(out.starts_with("genus 1"), "{out}");
    assert_eq!(run(&["genus", "--graph", &two]).0, 0);
}

#[test]
fn find_patterns() {
    let spec = C1FF;
    let (code, out, _) = run(&["find", spec, "--pattern", "K5", "--json"]);
    assert_eq!(code, 0);
    match serde_json::from_str::<FindOutput>(&out).unwrap() {
        FindOutput::Subdivision { witness } => assert!(witness.is_some()),
        other => panic!("{other:?}"),
    }
    let (code, out, _) = run(&["find", FFF, "--pattern", "2K2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("no 2K2"), "{out}");
    let (code, out, _) = run(&["find", spec, "--pattern", "C4", "--hints", "0,1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("C4 on"), "{out}");
}

#[test]
fn invariants_json() {
    let (code, out, _) = run(&["invariants", C1FF, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["planar"], false);
    assert_eq!(v["stats"]["vertices"], 10);
}

#[test]
fn formulas_agree() {
    let (code, out, _) = run(&["formulas", "--max-n", "6", "--max-mn", "4"]);
    assert_eq!(code, 0);
    assert!(!out.contains("disagree"));
    assert!(out.lines().any(|l| l.starts_with("K6") && l.contains("crosscap") && l.ends_with("agree")));
}

#[test]
fn verify_with_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "cfg.json",
        r#"{"templates": [{"family": "field"}, {"family": "chain", "k": 1}, {"family": "chain", "k": 2}],
            "n_max": 3, "max_vertices": 12,
            "budgets": {"genus": 1000000, "crosscap": 1000000, "subdivision": 1000000}}"#,
    );
    let ledger = dir.path().join("ledger.jsonl");
    let args = ["verify", "--config", &cfg, "--ledger", ledger.to_str().unwrap(), "--json"];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let first: VerificationReport = serde_json::from_str(&out).unwrap();
    assert_eq!(first.summary.fail, 0);
    let (_, out, _) = run(&args);
    let second: VerificationReport = serde_json::from_str(&out).unwrap();
    assert_eq!(second.summary.reused, second.rows.len());
    assert_eq!(serde_json::to_value(&second.rows).unwrap(), serde_json::to_value(&first.rows).unwrap());
    let (code, out, _) = run(&["verify", "--config", &cfg]);
    assert_eq!(code, 0);
    assert!(out.contains("0 fail"));
}

#[test]
fn verify_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "cfg.json",
        r#"{"templates": [{"family": "field"}, {"family": "twogen_flat", "q": 2}], "n_max": 2, "max_vertices": 12}"#,
    );
    let (code, out, _) = run(&["verify", "--config", &cfg]);
    assert_eq!(code, 1);
    assert!(out.contains("crosscap_class"), "{out}");
}
