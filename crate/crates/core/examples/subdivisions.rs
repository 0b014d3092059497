//! Kuratowski-type witnesses, including K5,5 in the graph of F^5 found from
//! a hint set of ideals.

use pisgraph::graph::{build_pis, LabeledGraph};
use pisgraph::patterns::{check_subdivision, find_subdivision, TopoPattern};
use pisgraph::ring::{ring_of, Family, IdealTuple};
use pisgraph::surface::{subdivision_lower_bound, Invariant};

fn show(g: &LabeledGraph, pattern: TopoPattern, hints: Option<&[usize]>) {
    match find_subdivision(g, pattern, hints, 50_000_000) {
        Ok(Some(w)) => {
            check_subdivision(g, &w).expect("witness checks out");
            let branch: Vec<&str> = w.branch.iter().map(|&v| g.label(v)).collect();
            println!("{pattern}: branch vertices {}", branch.join(" "));
            for p in w.paths.iter().filter(|p| p.len() > 2) {
                let path: Vec<&str> = p.iter().map(|&v| g.label(v)).collect();
                println!("    subdivided edge {}", path.join(" - "));
            }
        }
        Ok(None) => println!("{pattern}: none"),
        Err(e) => println!("{pattern}: {e}"),
    }
}

fn main() {
    let f4 = build_pis(&ring_of(&[Family::Field; 4]).unwrap()).unwrap();
    show(&f4, TopoPattern::K33, None);
    let c1ff = build_pis(&ring_of(&[Family::Chain { k: 1 }, Family::Field, Family::Field]).unwrap()).unwrap();
    show(&c1ff, TopoPattern::K5, None);
    let fc2 = build_pis(&ring_of(&[Family::Field, Family::Chain { k: 2 }]).unwrap()).unwrap();
    show(&fc2, TopoPattern::K23, None);

    let f5 = build_pis(&ring_of(&[Family::Field; 5]).unwrap()).unwrap();
    let sets: [&[usize]; 17] = [
        &[1, 4, 5], &[2, 4], &[4, 5], &[1, 4], &[1, 5], &[3, 4, 5], &[1, 2, 4, 5], &[1, 3], &[1, 3, 5],
        &[1, 2], &[1, 3, 4], &[1, 3, 4, 5], &[1, 2, 3, 5], &[2, 3, 4], &[3, 5], &[2, 4, 5], &[2, 3, 5],
    ];
    let hints: Vec<usize> = sets
        .iter()
        .map(|s| {
            let t = IdealTuple::new((1..=5).map(|i| usize::from(s.contains(&i))).collect());
            f5.vertex_of_ideal(&t).unwrap()
        })
        .collect();
    show(&f5, TopoPattern::K55, Some(&hints));
    let w = find_subdivision(&f5, TopoPattern::K55, Some(&hints), 50_000_000).unwrap().unwrap();
    let bound = subdivision_lower_bound(&f5, &w, Invariant::Genus).unwrap();
    println!("genus of F^5 is at least {}", bound.value());
}
