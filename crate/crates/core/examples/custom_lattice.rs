//! A ring given as a JSON spec with a hand-written ideal lattice.

use pisgraph::classifier::classify;
use pisgraph::graph::build_pis;
use pisgraph::ring::parse_ring_spec;

fn main() {
    // Z/4 has ideals 0 < (2) < Z/4, the same lattice as chain(1)
    let spec = r#"{"factors": [
        {"family": "field"},
        {"family": "custom", "name": "Z4", "elements": ["0", "2", "R"],
         "join": [["0","2","R"],["2","2","R"],["R","R","R"]], "maximal": "2"}
    ]}"#;
    let ring = parse_ring_spec(spec).expect("valid spec");
    let g = build_pis(&ring).unwrap();
    println!("{}: key {}", ring.describe(), ring.canonical_key());
    for (u, v) in g.edges() {
        println!("  {} -- {}", g.label(u), g.label(v));
    }
    let p = classify(&ring.shape_summary());
    println!("unicyclic predicted: {}", p.unicyclic);

    // an invalid table is rejected with the failing axiom
    let bad = spec.replace(r#"["2","2","R"]"#, r#"["2","0","R"]"#);
    match parse_ring_spec(&bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
