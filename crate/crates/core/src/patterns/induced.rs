use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::graph::SimpleGraph;

/// Small graphs searched for as induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InducedPattern {
    P4,
    C4,
    C5,
    #[serde(rename = "2K2")]
    TwoK2,
}

impl InducedPattern {
    pub const ALL: [InducedPattern; 4] = [
        InducedPattern::P4,
        InducedPattern::C4,
        InducedPattern::C5,
        InducedPattern::TwoK2,
    ];

    pub fn graph(self) -> SimpleGraph {
        match self {
            InducedPattern::P4 => SimpleGraph::path(4),
            InducedPattern::C4 => SimpleGraph::cycle(4),
            InducedPattern::C5 => SimpleGraph::cycle(5),
            InducedPattern::TwoK2 => SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).expect("valid"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InducedPattern::P4 => "P4",
            InducedPattern::C4 => "C4",
            InducedPattern::C5 => "C5",
            InducedPattern::TwoK2 => "2K2",
        }
    }
}

impl fmt::Display for InducedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InducedPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InducedPattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PatternError::UnknownPattern(s.to_string()))
    }
}

/// `vertices[i]` is the image of pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedWitness {
    pub pattern: InducedPattern,
    pub vertices: Vec<usize>,
}

/// First induced copy in lexicographic order of the image tuple.
pub fn find_induced(g: &SimpleGraph, pattern: InducedPattern) -> Option<InducedWitness> {
    let p = pattern.graph();
    let mut image = Vec::with_capacity(p.vertex_count());
    let mut used = vec![false; g.vertex_count()];
    if extend(g, &p, &mut image, &mut used) {
        Some(InducedWitness {
            pattern,
            vertices: image,
        })
    } else {
        None
    }
}

fn extend(g: &SimpleGraph, p: &SimpleGraph, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == p.vertex_count() {
        return true;
    }
    for v in 0..g.vertex_count() {
        if used[v] {
            continue;
        }
        let consistent = image
            .iter()
            .enumerate()
            .all(|(j, &w)| p.has_edge(i, j) == g.has_edge(v, w));
        if !consistent {
            continue;
        }
        used[v] = true;
        image.push(v);
        if extend(g, p, image, used) {
            return true;
        }
        image.pop();
        used[v] = false;
    }
    false
}

/// The witness vertices are distinct and induce exactly the pattern.
pub fn check_induced(g: &SimpleGraph, w: &InducedWitness) -> Result<(), PatternError> {
    let p = w.pattern.graph();
    let bad = |m: String| Err(PatternError::InvalidWitness(m));
    if w.vertices.len() != p.vertex_count() {
        return bad(format!("expected {} vertices", p.vertex_count()));
    }
    for (i, &a) in w.vertices.iter().enumerate() {
        if a >= g.vertex_count() {
            return bad(format!("vertex {a} out of range"));
        }
        for (j, &b) in w.vertices.iter().enumerate().skip(i + 1) {
            if a == b {
                return bad(format!("vertex {a} repeated"));
            }
            if p.has_edge(i, j) != g.has_edge(a, b) {
                return bad(format!("adjacency of {a} and {b} does not match the pattern"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_finds() {
        let p5 = SimpleGraph::path(5);
        let w = find_induced(&p5, InducedPattern::P4).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(check_induced(&p5, &w).is_ok());
        assert!(find_induced(&SimpleGraph::complete(5), InducedPattern::P4).is_none());
        assert!(find_induced(&SimpleGraph::cycle(5), InducedPattern::C4).is_none());
        assert!(find_induced(&SimpleGraph::cycle(5), InducedPattern::C5).is_some());
        assert!(find_induced(&SimpleGraph::cycle(6), InducedPattern::TwoK2).is_some());
        assert!(find_induced(&SimpleGraph::complete_bipartite(2, 2), InducedPattern::C4).is_some());
    }

    #[test]
    fn bad_witness() {
        let g = SimpleGraph::complete(4);
        let w = InducedWitness {
            pattern: InducedPattern::P4,
            vertices: vec![0, 1, 2, 3],
        };
        assert!(check_induced(&g, &w).is_err());
    }

    #[test]
    fn names() {
        assert_eq!("2k2".parse::<InducedPattern>().unwrap(), InducedPattern::TwoK2);
        assert!("K9".parse::<InducedPattern>().is_err());
    }
}
