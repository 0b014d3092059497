//! Topological containment: subdivisions of small complete and complete
//! bipartite graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TopoPattern {
    K4,
    K23,
    K5,
    K33,
    K54,
    K55,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternShape {
    Complete(usize),
    Bipartite(usize, usize),
}

impl TopoPattern {
    pub const ALL: [TopoPattern; 6] = [
        TopoPattern::K4,
        TopoPattern::K23,
        TopoPattern::K5,
        TopoPattern::K33,
        TopoPattern::K54,
        TopoPattern::K55,
    ];

    pub fn shape(self) -> PatternShape {
        match self {
            TopoPattern::K4 => PatternShape::Complete(4),
            TopoPattern::K5 => PatternShape::Complete(5),
            TopoPattern::K23 => PatternShape::Bipartite(2, 3),
            TopoPattern::K33 => PatternShape::Bipartite(3, 3),
            TopoPattern::K54 => PatternShape::Bipartite(5, 4),
            TopoPattern::K55 => PatternShape::Bipartite(5, 5),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TopoPattern::K4 => "K4",
            TopoPattern::K23 => "K23",
            TopoPattern::K5 => "K5",
            TopoPattern::K33 => "K33",
            TopoPattern::K54 => "K54",
            TopoPattern::K55 => "K55",
        }
    }

    pub fn graph(self) -> SimpleGraph {
        match self.shape() {
            PatternShape::Complete(n) => SimpleGraph::complete(n),
            PatternShape::Bipartite(m, n) => SimpleGraph::complete_bipartite(m, n),
        }
    }

    pub fn branch_count(self) -> usize {
        match self.shape() {
            PatternShape::Complete(n) => n,
            PatternShape::Bipartite(m, n) => m + n,
        }
    }

    /// Pattern edges in the order used by witnesses.
    pub fn edges(self) -> Vec<(usize, usize)> {
        self.graph().edges().collect()
    }
}

impl fmt::Display for TopoPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TopoPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TopoPattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PatternError::UnknownPattern(s.to_string()))
    }
}

/// `branch[i]` is the image of pattern vertex `i`; `paths[j]` runs from
/// the image of `edges()[j].0` to the image of `edges()[j].1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub pattern: TopoPattern,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionWitness {
    fn remap(self, map: &[usize]) -> Self {
        SubdivisionWitness {
            pattern: self.pattern,
            branch: self.branch.iter().map(|&v| map[v]).collect(),
            paths: self
                .paths
                .iter()
                .map(|p| p.iter().map(|&v| map[v]).collect())
                .collect(),
        }
    }

    /// Vertices used by the witness, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.paths.iter().flatten().copied().chain(self.branch.iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Searches for a subdivision of `pattern` in `g`.
///
/// With `hints`, the subgraph induced by the hinted vertices is searched
/// first, then the whole graph. `Ok(None)` means the search finished and
/// no subdivision exists; running out of budget is an error.
pub fn find_subdivision(
    g: &SimpleGraph,
    pattern: TopoPattern,
    hints: Option<&[usize]>,
    budget: u64,
) -> Result<Option<SubdivisionWitness>, PatternError> {
    let mut nodes = 0u64;
    if let Some(h) = hints {
        let mut h = h.to_vec();
        h.sort_unstable();
        h.dedup();
        if let Some(&bad) = h.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(PatternError::BadHint(bad));
        }
        let sub = g.induced(&h);
        if let Some(w) = Finder::new(&sub, pattern, budget, &mut nodes).run()? {
            return Ok(Some(w.remap(&h)));
        }
    }
    Finder::new(g, pattern, budget, &mut nodes).run()
}

struct Finder<'a> {
    g: &'a SimpleGraph,
    pattern: TopoPattern,
    pat: SimpleGraph,
    pat_edges: Vec<(usize, usize)>,
    /// Graph vertices by non-increasing degree.
    order: Vec<usize>,
    branch: Vec<usize>,
    /// Position in `order` of each assigned branch vertex.
    branch_pos: Vec<usize>,
    occupied: Vec<bool>,
    paths: Vec<Vec<usize>>,
    budget: u64,
    nodes: &'a mut u64,
}

struct Abort;

impl<'a> Finder<'a> {
    fn new(g: &'a SimpleGraph, pattern: TopoPattern, budget: u64, nodes: &'a mut u64) -> Self {
        let pat = pattern.graph();
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Finder {
            g,
            pattern,
            pat_edges: pat.edges().collect(),
            pat,
            order,
            branch: Vec::new(),
            branch_pos: Vec::new(),
            occupied: vec![false; g.vertex_count()],
            paths: Vec::new(),
            budget,
            nodes,
        }
    }

    fn tick(&mut self) -> Result<(), Abort> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            Err(Abort)
        } else {
            Ok(())
        }
    }

    fn run(mut self) -> Result<Option<SubdivisionWitness>, PatternError> {
        let b = self.pattern.branch_count();
        if self.g.vertex_count() < b {
            return Ok(None);
        }
        match self.assign() {
            Ok(true) => Ok(Some(SubdivisionWitness {
                pattern: self.pattern,
                branch: self.branch,
                paths: self.paths,
            })),
            Ok(false) => Ok(None),
            Err(Abort) => Err(PatternError::BudgetExhausted),
        }
    }

    /// Smallest admissible position in `order` for the next branch vertex;
    /// breaks the symmetry of the pattern.
    fn min_pos(&self) -> usize {
        let i = self.branch.len();
        match self.pattern.shape() {
            PatternShape::Complete(_) => self.branch_pos.last().map_or(0, |&p| p + 1),
            PatternShape::Bipartite(m, n) => {
                if i == 0 {
                    0
                } else if i < m {
                    self.branch_pos[i - 1] + 1
                } else if i == m {
                    if m == n {
                        self.branch_pos[0] + 1
                    } else {
                        0
                    }
                } else {
                    self.branch_pos[i - 1] + 1
                }
            }
        }
    }

    fn missing_direct(&self) -> usize {
        let k = self.branch.len();
        self.pat_edges
            .iter()
            .filter(|&&(a, b)| a < k && b < k && !self.g.has_edge(self.branch[a], self.branch[b]))
            .count()
    }

    fn assign(&mut self) -> Result<bool, Abort> {
        let b = self.pattern.branch_count();
        let i = self.branch.len();
        if i == b {
            return self.route_all();
        }
        let need = self.pat.degree(i);
        for pos in self.min_pos()..self.order.len() {
            let v = self.order[pos];
            if self.g.degree(v) < need {
                // degrees only decrease along `order`
                break;
            }
            if self.occupied[v] {
                continue;
            }
            self.tick()?;
            self.branch.push(v);
            self.branch_pos.push(pos);
            self.occupied[v] = true;
            let free = self.g.vertex_count() - self.branch.len();
            if self.missing_direct() <= free && self.assign()? {
                return Ok(true);
            }
            self.occupied[v] = false;
            self.branch.pop();
            self.branch_pos.pop();
        }
        Ok(false)
    }

    fn route_all(&mut self) -> Result<bool, Abort> {
        // each branch vertex needs enough usable neighbours
        for (i, &u) in self.branch.iter().enumerate() {
            let direct = self
                .pat
                .neighbors(i)
                .iter()
                .filter(|&&j| self.g.has_edge(u, self.branch[j]))
                .count();
            let free = self.g.neighbors(u).iter().filter(|&&w| !self.occupied[w]).count();
            if direct + free < self.pat.degree(i) {
                return Ok(false);
            }
        }
        let mut missing = Vec::new();
        self.paths = vec![Vec::new(); self.pat_edges.len()];
        for (j, &(a, b)) in self.pat_edges.iter().enumerate() {
            let (u, v) = (self.branch[a], self.branch[b]);
            if self.g.has_edge(u, v) {
                self.paths[j] = vec![u, v];
            } else {
                missing.push(j);
            }
        }
        self.route(&missing, 0)
    }

    fn endpoints(&self, j: usize) -> (usize, usize) {
        let (a, b) = self.pat_edges[j];
        (self.branch[a], self.branch[b])
    }

    fn reachable(&self, u: usize, v: usize) -> bool {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            for &w in self.g.neighbors(x) {
                if w == v && x != u {
                    return true;
                }
                if !seen[w] && !self.occupied[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn route(&mut self, missing: &[usize], idx: usize) -> Result<bool, Abort> {
        if idx == missing.len() {
            return Ok(true);
        }
        let free = self.occupied.iter().filter(|&&o| !o).count();
        let rest = missing.len() - idx;
        if free < rest {
            return Ok(false);
        }
        for &j in &missing[idx..] {
            let (u, v) = self.endpoints(j);
            if !self.reachable(u, v) {
                return Ok(false);
            }
        }
        let j = missing[idx];
        let (u, v) = self.endpoints(j);
        // shortest paths first; later edges need one interior vertex each
        for len in 1..=free - (rest - 1) {
            let mut path = vec![u];
            if self.paths_of_len(missing, idx, v, len, &mut path)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Extends `path` by exactly `left` free interior vertices and then `v`.
    fn paths_of_len(
        &mut self,
        missing: &[usize],
        idx: usize,
        v: usize,
        left: usize,
        path: &mut Vec<usize>,
    ) -> Result<bool, Abort> {
        self.tick()?;
        let x = *path.last().unwrap();
        if left == 0 {
            if !self.g.has_edge(x, v) {
                return Ok(false);
            }
            path.push(v);
            self.paths[missing[idx]] = path.clone();
            let ok = self.route(missing, idx + 1)?;
            path.pop();
            return Ok(ok);
        }
        for k in 0..self.g.degree(x) {
            let w = self.g.neighbors(x)[k];
            if self.occupied[w] {
                continue;
            }
            self.occupied[w] = true;
            path.push(w);
            let ok = self.paths_of_len(missing, idx, v, left - 1, path)?;
            path.pop();
            self.occupied[w] = false;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Independent check that a witness really is a subdivision inside `g`.
pub fn check_subdivision(g: &SimpleGraph, w: &SubdivisionWitness) -> Result<(), PatternError> {
    let bad = |m: String| Err(PatternError::InvalidWitness(m));
    let n = g.vertex_count();
    if w.branch.len() != w.pattern.branch_count() {
        return bad(format!("{} branch vertices for {}", w.branch.len(), w.pattern));
    }
    let mut used = vec![false; n];
    for &b in &w.branch {
        if b >= n || used[b] {
            return bad(format!("branch vertex {b} out of range or repeated"));
        }
        used[b] = true;
    }
    let edges = w.pattern.edges();
    if w.paths.len() != edges.len() {
        return bad(format!("{} paths for {} pattern edges", w.paths.len(), edges.len()));
    }
    for (path, &(a, b)) in w.paths.iter().zip(&edges) {
        if path.len() < 2 || path[0] != w.branch[a] || path[path.len() - 1] != w.branch[b] {
            return bad(format!("path for pattern edge {a}-{b} has wrong endpoints"));
        }
        for pair in path.windows(2) {
            if pair[0] >= n || pair[1] >= n || !g.has_edge(pair[0], pair[1]) {
                return bad(format!("{} and {} are not adjacent", pair[0], pair[1]));
            }
        }
        for &x in &path[1..path.len() - 1] {
            if used[x] {
                return bad(format!("interior vertex {x} is shared"));
            }
            used[x] = true;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(g: &SimpleGraph, p: TopoPattern) -> Option<SubdivisionWitness> {
        find_subdivision(g, p, None, u64::MAX).unwrap()
    }

    #[test]
    fn finds_in_pattern_itself() {
        for p in TopoPattern::ALL {
            let w = find(&p.graph(), p).unwrap();
            check_subdivision(&p.graph(), &w).unwrap();
        }
    }

    #[test]
    fn subdivided_k33() {
        // K33 with the edge 0-3 subdivided by vertex 6
        let mut g = SimpleGraph::complete_bipartite(3, 3);
        g.remove_edge(0, 3);
        let mut h = SimpleGraph::new(7);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, 6);
        h.add_edge(6, 3);
        let w = find(&h, TopoPattern::K33).unwrap();
        check_subdivision(&h, &w).unwrap();
        assert!(w.paths.iter().any(|p| p.len() == 3));
        assert!(find(&h, TopoPattern::K5).is_none());
    }

    #[test]
    fn planar_graphs_have_none() {
        let wheel = {
            let mut g = SimpleGraph::new(7);
            for i in 0..6 {
                g.add_edge(i, (i + 1) % 6);
                g.add_edge(i, 6);
            }
            g
        };
        assert!(find(&wheel, TopoPattern::K33).is_none());
        assert!(find(&wheel, TopoPattern::K5).is_none());
        assert!(find(&wheel, TopoPattern::K4).is_some());
        assert!(find(&SimpleGraph::cycle(6), TopoPattern::K4).is_none());
        assert!(find(&SimpleGraph::cycle(6), TopoPattern::K23).is_none());
    }

    #[test]
    fn budget_is_reported() {
        let g = SimpleGraph::complete_bipartite(6, 6);
        assert_eq!(
            find_subdivision(&g, TopoPattern::K55, None, 5),
            Err(PatternError::BudgetExhausted)
        );
    }

    #[test]
    fn tampered_witness_rejected() {
        let g = SimpleGraph::complete(5);
        let mut w = find(&g, TopoPattern::K5).unwrap();
        w.paths[0] = vec![w.branch[0], w.branch[2]];
        assert!(check_subdivision(&g, &w).is_err());
    }
}
