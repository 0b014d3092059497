//! Crosscap numbers from signed embeddings.

use pisgraph::graph::{build_pis, SimpleGraph};
use pisgraph::ring::{ring_of, Family};
use pisgraph::surface::{crosscap_exact, crosscap_of, trace_faces_signed, verify_report, Embedding};

fn main() {
    let k7 = SimpleGraph::complete(7);
    let r = crosscap_exact(&k7, 100_000_000).unwrap();
    println!("K7: crosscap {:?} after {} nodes", r.exact(), r.nodes);

    for fams in [
        vec![Family::Chain { k: 1 }, Family::Field, Family::Field],
        vec![Family::Chain { k: 2 }, Family::Chain { k: 1 }],
        vec![Family::Field, Family::TwogenFlat { q: 2 }],
    ] {
        let ring = ring_of(&fams).unwrap();
        let g = build_pis(&ring).unwrap();
        let r = crosscap_of(&g, 50_000_000).unwrap();
        verify_report(&g, &r).expect("certificates re-verify");
        print!("{}: crosscap in [{}, {}]", ring.describe(), r.lower_bound(), r.upper_bound());
        if let Some(Embedding::Signed { rotation }) = r.embedding() {
            let t = trace_faces_signed(&g, rotation).unwrap();
            let twisted = rotation.signs.iter().filter(|s| s.sign < 0).count();
            print!(", {} faces, {} twisted edges, orientable {}", t.face_count(), twisted, t.orientable);
        }
        println!();
    }
}
