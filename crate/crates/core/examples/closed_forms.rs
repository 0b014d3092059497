//! Searched genus and crosscap numbers of complete graphs against the
//! closed forms.

use pisgraph::graph::SimpleGraph;
use pisgraph::surface::{
    crosscap_complete, crosscap_complete_bipartite, crosscap_exact, genus_complete, genus_complete_bipartite,
    genus_exact,
};

fn main() {
    let budget = 20_000_000;
    println!("{:<6} {:>6} {:>6} {:>9} {:>9}", "graph", "genus", "form", "crosscap", "form");
    for n in 3..=7 {
        let g = SimpleGraph::complete(n);
        let gr = genus_exact(&g, budget).unwrap();
        let cr = crosscap_exact(&g, budget).unwrap();
        println!(
            "K{n:<5} {:>6} {:>6} {:>9} {:>9}",
            gr.point().unwrap(),
            genus_complete(n),
            cr.point().unwrap(),
            crosscap_complete(n)
        );
    }
    for (m, n) in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5), (5, 5)] {
        let g = SimpleGraph::complete_bipartite(m, n);
        let gr = genus_exact(&g, budget).unwrap();
        let cr = crosscap_exact(&g, budget).unwrap();
        let show = |r: &pisgraph::surface::SurfaceReport| match r.exact() {
            Some(v) => v.to_string(),
            None => format!("[{},{}]", r.lower_bound(), r.upper_bound()),
        };
        println!(
            "K{m},{n:<3} {:>6} {:>6} {:>9} {:>9}",
            show(&gr),
            genus_complete_bipartite(m, n),
            show(&cr),
            crosscap_complete_bipartite(m, n)
        );
    }
}
