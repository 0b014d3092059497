//! Biconnected components.

use crate::graph::SimpleGraph;

/// Blocks of `g` as sorted vertex lists, in discovery order. Isolated
/// vertices belong to no block; a bridge is a block with two vertices.
pub fn blocks(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            let nb = g.neighbors(u);
            if top.2 < nb.len() {
                let w = nb[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                let mut vs = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    vs.push(a);
                    vs.push(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                vs.sort_unstable();
                vs.dedup();
                out.push(vs);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_and_pendant() {
        // two triangles sharing vertex 2, plus pendant 4-5
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let mut b = blocks(&g);
        b.sort();
        assert_eq!(b, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5]]);
    }

    #[test]
    fn biconnected_graph_is_one_block() {
        assert_eq!(blocks(&SimpleGraph::complete(5)).len(), 1);
        assert_eq!(blocks(&SimpleGraph::path(4)).len(), 3);
        assert!(blocks(&SimpleGraph::new(3)).is_empty());
    }
}
