//! Exact genus with certificates, then re-checked independently.

use pisgraph::graph::build_pis;
use pisgraph::ring::{ring_of, Family};
use pisgraph::surface::{genus_of, genus_up_to, verify_report, Embedding};

fn main() {
    for fams in [
        vec![Family::Chain { k: 1 }, Family::Field, Family::Field],
        vec![Family::Chain { k: 2 }, Family::Chain { k: 1 }],
    ] {
        let ring = ring_of(&fams).unwrap();
        let g = build_pis(&ring).unwrap();
        let r = genus_of(&g, 10_000_000).unwrap();
        verify_report(&g, &r).expect("certificates re-verify");
        println!(
            "{}: genus {} (lower bound by {}, {} nodes)",
            ring.describe(),
            r.point().unwrap(),
            r.lower.kind(),
            r.nodes
        );
        if let Some(Embedding::Orientable { rotation }) = r.embedding() {
            for (v, rot) in rotation.rotations.iter().enumerate() {
                let around: Vec<&str> = rot.iter().map(|&u| g.label(u)).collect();
                println!("  {} : {}", g.label(v), around.join(" "));
            }
        }
    }

    // only decide up to genus 1; larger values stay as a lower bound
    let ring = ring_of(&[Family::Field; 4]).unwrap();
    let g = build_pis(&ring).unwrap();
    let r = genus_up_to(&g, 10_000_000, 1).unwrap();
    println!("{}: genus in [{}, {}]", ring.describe(), r.lower_bound(), r.upper_bound());
}
