//! Build the graph of F x F x F x F, print its statistics and Graphviz text.

use pisgraph::graph::{build_pis, export_dot, graph_stats};
use pisgraph::ring::{ring_of, Family};

fn main() {
    let ring = ring_of(&[Family::Field; 4]).expect("builtin templates");
    let g = build_pis(&ring).expect("product of four fields");
    let stats = graph_stats(&g);
    println!("{}: {} vertices, {} edges, girth {:?}", ring.describe(), stats.vertices, stats.edges, stats.girth);
    for v in 0..g.vertex_count() {
        let nbrs: Vec<&str> = g.neighbors(v).iter().map(|&u| g.label(u)).collect();
        println!("  {} ~ {}", g.label(v), nbrs.join(" "));
    }
    print!("{}", export_dot(&g));
}
