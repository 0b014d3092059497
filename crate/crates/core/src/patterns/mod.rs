//! Induced patterns, graph classes and topological minors.

mod classes;
mod induced;
mod subdivision;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use classes::{classify_graph, ClassWitness, GraphClass, Membership};
pub use induced::{check_induced, find_induced, InducedPattern, InducedWitness};
pub use subdivision::{check_subdivision, find_subdivision, PatternShape, SubdivisionWitness, TopoPattern};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("hint vertex {0} is out of range")]
    BadHint(usize),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

/// Any pattern accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Pattern {
    Induced(InducedPattern),
    Topological(TopoPattern),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Induced(p) => p.fmt(f),
            Pattern::Topological(p) => p.fmt(f),
        }
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse()
            .map(Pattern::Induced)
            .or_else(|_| s.parse().map(Pattern::Topological))
    }
}
