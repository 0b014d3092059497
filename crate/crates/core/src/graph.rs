//! Simple undirected graphs and the prime ideal sum graph construction.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{IdealTuple, RingSpec};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("the ring is local (one factor); PIS(R) is only built for non-local rings")]
    LocalRing,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Simple undirected graph with sorted adjacency lists and an adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edges: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list; repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edges += 1;
        Ok(true)
    }

    /// Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let n = self.vertex_count();
        self.matrix[u * n + v] = false;
        self.matrix[v * n + u] = false;
        self.adj[u].retain(|&x| x != v);
        self.adj[v].retain(|&x| x != u);
        self.edges -= 1;
        true
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut g = SimpleGraph::new(m + n);
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.adj.len() + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// A graph whose vertices carry display labels and, for PIS graphs, the
/// ideal tuples they stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: SimpleGraph,
    labels: Vec<String>,
    ideals: Vec<IdealTuple>,
}

impl LabeledGraph {
    /// Wraps a plain graph; vertices are labelled by their index.
    pub fn unlabeled(graph: SimpleGraph) -> Self {
        let labels = (0..graph.vertex_count()).map(|i| i.to_string()).collect();
        LabeledGraph {
            graph,
            labels,
            ideals: Vec::new(),
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Ideal tuples (empty for graphs not built from a ring).
    pub fn ideals(&self) -> &[IdealTuple] {
        &self.ideals
    }

    pub fn vertex_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_of_ideal(&self, ideal: &IdealTuple) -> Option<usize> {
        self.ideals.binary_search(ideal).ok()
    }

    /// Restriction to the given vertices, keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> LabeledGraph {
        LabeledGraph {
            graph: self.graph.induced(vertices),
            labels: vertices.iter().map(|&v| self.labels[v].clone()).collect(),
            ideals: if self.ideals.is_empty() {
                Vec::new()
            } else {
                vertices.iter().map(|&v| self.ideals[v].clone()).collect()
            },
        }
    }
}

impl std::ops::Deref for LabeledGraph {
    type Target = SimpleGraph;
    fn deref(&self) -> &SimpleGraph {
        &self.graph
    }
}

/// `PIS(R)`: nonzero proper ideals, `I ~ J` iff `I + J` is prime.
pub fn build_pis(ring: &RingSpec) -> Result<LabeledGraph, GraphError> {
    if ring.factor_count() < 2 {
        return Err(GraphError::LocalRing);
    }
    let ideals = ring.enumerate_vertices();
    let n = ideals.len();
    let mut graph = SimpleGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if ring.is_prime_ideal(&ring.join_unchecked(&ideals[i], &ideals[j])) {
                graph.add_edge(i, j);
            }
        }
    }
    let labels = ideals.iter().map(|t| ring.label(t)).collect();
    Ok(LabeledGraph {
        graph,
        labels,
        ideals,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    /// Degree sequence, non-increasing.
    pub degrees: Vec<usize>,
    /// `None` stands for infinite girth (forests).
    pub girth: Option<usize>,
    pub components: usize,
}

pub fn graph_stats(g: &SimpleGraph) -> GraphStats {
    let mut degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    GraphStats {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        degrees,
        girth: g.girth(),
        components: g.components().len(),
    }
}

/// Graphviz text, vertices in enumeration order and edges lexicographic.
pub fn export_dot(g: &LabeledGraph) -> String {
    let mut out = String::from("graph PIS {\n");
    for (i, label) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Parses `u v` pairs (0-based), one per line. Blank lines and `#` comments
/// are skipped; the vertex count is one more than the largest index.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| GraphError::Parse {
            line: lineno + 1,
            message,
        };
        if parts.len() != 2 {
            return Err(err(format!("expected `u v`, got `{line}`")));
        }
        let u: usize = parts[0].parse().map_err(|_| err(format!("bad vertex `{}`", parts[0])))?;
        let v: usize = parts[1].parse().map_err(|_| err(format!("bad vertex `{}`", parts[1])))?;
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    SimpleGraph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &SimpleGraph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_of, Family};

    const F: Family = Family::Field;
    const C1: Family = Family::Chain { k: 1 };

    #[test]
    fn two_fields_give_null_graph() {
        let g = build_pis(&ring_of(&[F, F]).unwrap()).unwrap();
        let s = graph_stats(&g);
        assert_eq!((s.vertices, s.edges, s.components), (2, 0, 2));
        assert_eq!(s.girth, None);
    }

    #[test]
    fn four_fields() {
        let g = build_pis(&ring_of(&[F, F, F, F]).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 48));
    }

    #[test]
    fn three_fields() {
        let g = build_pis(&ring_of(&[F, F, F]).unwrap()).unwrap();
        let s = graph_stats(&g);
        assert_eq!((s.vertices, s.edges, s.girth, s.components), (6, 9, Some(3), 1));
        assert_eq!(export_dot(&g).matches(" -- ").count(), 9);
    }

    #[test]
    fn field_times_chain1_is_triangle_with_pendant() {
        let r = ring_of(&[F, C1]).unwrap();
        let g = build_pis(&r).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let v = |c: Vec<usize>| g.vertex_of_ideal(&IdealTuple::new(c)).unwrap();
        let (f0, fm, om, or) = (v(vec![1, 0]), v(vec![1, 1]), v(vec![0, 1]), v(vec![0, 2]));
        assert!(g.has_edge(f0, fm) && g.has_edge(fm, om) && g.has_edge(f0, om));
        assert_eq!(g.neighbors(or), &[om]);
    }

    #[test]
    fn local_ring_rejected() {
        assert_eq!(
            build_pis(&ring_of(&[C1]).unwrap()).unwrap_err(),
            GraphError::LocalRing
        );
    }

    #[test]
    fn dot_lines() {
        let g = LabeledGraph::unlabeled(SimpleGraph::new(2));
        let dot = export_dot(&g);
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 0);
        let t = LabeledGraph::unlabeled(SimpleGraph::complete(3));
        assert_eq!(export_dot(&t).matches(" -- ").count(), 3);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = SimpleGraph::complete(4);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("0 0\n"), Err(GraphError::SelfLoop(0))));
        assert!(matches!(parse_edge_list("0 x\n"), Err(GraphError::Parse { line: 1, .. })));
        let c = parse_edge_list("# cycle\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(c.girth(), Some(3));
    }

    #[test]
    fn girth_values() {
        assert_eq!(SimpleGraph::cycle(5).girth(), Some(5));
        assert_eq!(SimpleGraph::complete_bipartite(3, 3).girth(), Some(4));
        assert_eq!(SimpleGraph::path(4).girth(), None);
    }
}
