//! Direct class recognition with forbidden-subgraph witnesses.

use pisgraph::graph::build_pis;
use pisgraph::patterns::{classify_graph, ClassWitness, GraphClass};
use pisgraph::ring::{ring_of, Family};

fn main() {
    let rings: [&[Family]; 3] = [
        &[Family::Field, Family::Chain { k: 1 }],
        &[Family::Field, Family::Chain { k: 2 }],
        &[Family::Chain { k: 1 }, Family::Chain { k: 1 }],
    ];
    for fams in rings {
        let ring = ring_of(fams).unwrap();
        let g = build_pis(&ring).unwrap();
        println!("{}", ring.describe());
        for class in GraphClass::ALL {
            let m = classify_graph(&g, class);
            let why = match &m.witness {
                None => String::new(),
                Some(ClassWitness::Induced(w)) => {
                    let vs: Vec<&str> = w.vertices.iter().map(|&v| g.label(v)).collect();
                    format!("induced {} on {}", w.pattern, vs.join(" "))
                }
                Some(other) => format!("{other:?}"),
            };
            println!("  {:<10} {:<5} {why}", class.name(), m.member);
        }
    }
}
