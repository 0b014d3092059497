//! Membership tests for graph classes, each with a witness on failure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::induced::{find_induced, InducedPattern, InducedWitness};
use super::PatternError;
use crate::graph::SimpleGraph;
use crate::surface::blocks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Split,
    Threshold,
    Cograph,
    Cactus,
    Unicyclic,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Split,
        GraphClass::Threshold,
        GraphClass::Cograph,
        GraphClass::Cactus,
        GraphClass::Unicyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Split => "split",
            GraphClass::Threshold => "threshold",
            GraphClass::Cograph => "cograph",
            GraphClass::Cactus => "cactus",
            GraphClass::Unicyclic => "unicyclic",
        }
    }

    /// Forbidden induced subgraphs characterising the class, if it is
    /// defined that way.
    pub fn forbidden(self) -> &'static [InducedPattern] {
        use InducedPattern::*;
        match self {
            GraphClass::Split => &[C4, C5, TwoK2],
            GraphClass::Threshold => &[P4, C4, TwoK2],
            GraphClass::Cograph => &[P4],
            GraphClass::Cactus | GraphClass::Unicyclic => &[],
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| PatternError::UnknownPattern(s.to_string()))
    }
}

/// Why a graph is not in a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassWitness {
    Induced(InducedWitness),
    Disconnected,
    /// A block that is neither a single edge nor a cycle.
    Block { vertices: Vec<usize>, edges: usize },
    /// Connected, but the edge count differs from the vertex count.
    EdgeCount { vertices: usize, edges: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub class: GraphClass,
    pub member: bool,
    pub witness: Option<ClassWitness>,
}

pub fn classify_graph(g: &SimpleGraph, class: GraphClass) -> Membership {
    let witness = match class {
        GraphClass::Split | GraphClass::Threshold | GraphClass::Cograph => class
            .forbidden()
            .iter()
            .find_map(|&p| find_induced(g, p))
            .map(ClassWitness::Induced),
        GraphClass::Cactus => cactus_witness(g),
        GraphClass::Unicyclic => {
            if !g.is_connected() {
                Some(ClassWitness::Disconnected)
            } else if g.edge_count() != g.vertex_count() {
                Some(ClassWitness::EdgeCount {
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                })
            } else {
                None
            }
        }
    };
    Membership {
        class,
        member: witness.is_none(),
        witness,
    }
}

fn cactus_witness(g: &SimpleGraph) -> Option<ClassWitness> {
    if !g.is_connected() {
        return Some(ClassWitness::Disconnected);
    }
    for b in blocks(g) {
        let edges = g.induced(&b).edge_count();
        let ok = (b.len() == 2 && edges == 1) || (b.len() >= 3 && edges == b.len());
        if !ok {
            return Some(ClassWitness::Block { vertices: b, edges });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member(g: &SimpleGraph, c: GraphClass) -> bool {
        classify_graph(g, c).member
    }

    #[test]
    fn small_cases() {
        let k4 = SimpleGraph::complete(4);
        assert!(member(&k4, GraphClass::Split));
        assert!(member(&k4, GraphClass::Threshold));
        assert!(!member(&k4, GraphClass::Cactus));
        let c4 = SimpleGraph::cycle(4);
        assert!(!member(&c4, GraphClass::Split));
        assert!(member(&c4, GraphClass::Cograph));
        assert!(member(&c4, GraphClass::Cactus));
        assert!(member(&c4, GraphClass::Unicyclic));
        let p4 = SimpleGraph::path(4);
        assert!(member(&p4, GraphClass::Split));
        assert!(!member(&p4, GraphClass::Threshold));
        assert!(!member(&p4, GraphClass::Unicyclic));
        assert!(member(&p4, GraphClass::Cactus));
    }

    #[test]
    fn witnesses() {
        let m = classify_graph(&SimpleGraph::new(2), GraphClass::Cactus);
        assert_eq!(m.witness, Some(ClassWitness::Disconnected));
        let m = classify_graph(&SimpleGraph::cycle(5), GraphClass::Split);
        assert!(matches!(m.witness, Some(ClassWitness::Induced(ref w)) if w.pattern == InducedPattern::C5));
    }
}
