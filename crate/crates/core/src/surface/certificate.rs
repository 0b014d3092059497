use serde::{Deserialize, Serialize};

use super::blocks::blocks;
use super::bounds::{
    crosscap_complete, crosscap_complete_bipartite, euler_lower_bounds, genus_complete,
    genus_complete_bipartite,
};
use super::exact::{compose_crosscap, compose_genus};
use super::rotation::{trace_faces, trace_faces_signed, RotationSystem, SignedRotationSystem};
use super::SurfaceError;
use crate::graph::SimpleGraph;
use crate::patterns::{check_subdivision, PatternShape, SubdivisionWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Genus,
    Crosscap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Embedding {
    Orientable { rotation: RotationSystem },
    Signed { rotation: SignedRotationSystem },
}

/// A one-sided bound on the genus or crosscap number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceCertificate {
    /// Upper bound: a cellular embedding realising `value`.
    Embedding { value: u32, embedding: Embedding },
    /// Lower bound from Euler's formula and the girth.
    EulerBound {
        value: u32,
        vertices: usize,
        edges: usize,
        girth: Option<usize>,
    },
    /// Lower bound from a subdivided complete or complete bipartite graph.
    SubdivisionBound { value: u32, witness: SubdivisionWitness },
    /// Lower bound: the search refuted every value below `value`. This
    /// evidence is only reproducible by running the search again.
    ExhaustiveSearch { value: u32, nodes: u64 },
    /// Bound assembled from the blocks of the graph.
    BlockComposition { value: u32, blocks: Vec<BlockReport> },
}

impl SurfaceCertificate {
    pub fn value(&self) -> u32 {
        match self {
            SurfaceCertificate::Embedding { value, .. }
            | SurfaceCertificate::EulerBound { value, .. }
            | SurfaceCertificate::SubdivisionBound { value, .. }
            | SurfaceCertificate::ExhaustiveSearch { value, .. }
            | SurfaceCertificate::BlockComposition { value, .. } => *value,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SurfaceCertificate::Embedding { .. } => "embedding",
            SurfaceCertificate::EulerBound { .. } => "euler_bound",
            SurfaceCertificate::SubdivisionBound { .. } => "subdivision_bound",
            SurfaceCertificate::ExhaustiveSearch { .. } => "exhaustive_search",
            SurfaceCertificate::BlockComposition { .. } => "block_composition",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    /// Vertices of the block in the parent graph, sorted. Reports below
    /// refer to the induced subgraph, numbered in this order.
    pub vertices: Vec<usize>,
    pub genus: SurfaceReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscap: Option<SurfaceReport>,
}

/// Lower and upper certificates for one invariant of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub invariant: Invariant,
    pub lower: SurfaceCertificate,
    pub upper: SurfaceCertificate,
    /// Search nodes spent.
    pub nodes: u64,
}

impl SurfaceReport {
    pub fn lower_bound(&self) -> u32 {
        self.lower.value()
    }

    pub fn upper_bound(&self) -> u32 {
        self.upper.value()
    }

    pub fn is_exact(&self) -> bool {
        self.lower.value() == self.upper.value()
    }

    pub fn exact(&self) -> Option<u32> {
        self.is_exact().then(|| self.lower.value())
    }

    /// The value, or the interval it is known to lie in.
    pub fn point(&self) -> Result<u32, SurfaceError> {
        self.exact().ok_or(SurfaceError::BudgetExhausted {
            lb: self.lower.value(),
            ub: self.upper.value(),
        })
    }

    /// The rotation system behind the upper bound, when it is a single
    /// embedding of the whole graph.
    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.upper {
            SurfaceCertificate::Embedding { embedding, .. } => Some(embedding),
            _ => None,
        }
    }
}

/// Lower bound from a subdivision witness and the closed formula for the
/// pattern, after checking the witness.
pub fn subdivision_lower_bound(
    g: &SimpleGraph,
    witness: &SubdivisionWitness,
    invariant: Invariant,
) -> Result<SurfaceCertificate, SurfaceError> {
    check_subdivision(g, witness).map_err(|e| SurfaceError::InvalidCertificate(e.to_string()))?;
    Ok(SurfaceCertificate::SubdivisionBound {
        value: pattern_value(witness, invariant),
        witness: witness.clone(),
    })
}

fn pattern_value(w: &SubdivisionWitness, invariant: Invariant) -> u32 {
    match (w.pattern.shape(), invariant) {
        (PatternShape::Complete(n), Invariant::Genus) => genus_complete(n),
        (PatternShape::Complete(n), Invariant::Crosscap) => crosscap_complete(n),
        (PatternShape::Bipartite(m, n), Invariant::Genus) => genus_complete_bipartite(m, n),
        (PatternShape::Bipartite(m, n), Invariant::Crosscap) => crosscap_complete_bipartite(m, n),
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, SurfaceError> {
    Err(SurfaceError::InvalidCertificate(msg.into()))
}

/// Checks one certificate against `g`. Exhaustive-search certificates are
/// accepted as stated.
pub fn verify_certificate(
    g: &SimpleGraph,
    invariant: Invariant,
    cert: &SurfaceCertificate,
) -> Result<(), SurfaceError> {
    match cert {
        SurfaceCertificate::Embedding { value, embedding } => {
            let actual = embedding_value(g, invariant, embedding)?;
            if actual != *value {
                return invalid(format!("embedding realises {actual}, certificate claims {value}"));
            }
            Ok(())
        }
        SurfaceCertificate::EulerBound {
            value,
            vertices,
            edges,
            girth,
        } => {
            if (*vertices, *edges, *girth) != (g.vertex_count(), g.edge_count(), g.girth()) {
                return invalid("Euler bound was computed for a different graph");
            }
            let (gl, cl) = euler_lower_bounds(g)?;
            let expect = match invariant {
                Invariant::Genus => gl,
                Invariant::Crosscap => cl,
            };
            if expect != *value {
                return invalid(format!("Euler bound is {expect}, certificate claims {value}"));
            }
            Ok(())
        }
        SurfaceCertificate::SubdivisionBound { value, witness } => {
            check_subdivision(g, witness).map_err(|e| SurfaceError::InvalidCertificate(e.to_string()))?;
            if pattern_value(witness, invariant) != *value {
                return invalid("value does not match the pattern formula");
            }
            Ok(())
        }
        SurfaceCertificate::ExhaustiveSearch { .. } => Ok(()),
        SurfaceCertificate::BlockComposition { value, blocks: parts } => {
            let mut expected = blocks(g);
            expected.sort();
            let mut got: Vec<Vec<usize>> = parts.iter().map(|b| b.vertices.clone()).collect();
            got.sort();
            if expected != got {
                return invalid("block list does not match the graph");
            }
            for b in parts {
                let sub = g.induced(&b.vertices);
                verify_report(&sub, &b.genus)?;
                if let Some(c) = &b.crosscap {
                    verify_report(&sub, c)?;
                } else if invariant == Invariant::Crosscap {
                    return invalid("block without crosscap report");
                }
            }
            let (lb, ub) = match invariant {
                Invariant::Genus => compose_genus(parts),
                Invariant::Crosscap => compose_crosscap(parts),
            };
            if *value != lb && *value != ub {
                return invalid(format!("blocks compose to [{lb}, {ub}], certificate claims {value}"));
            }
            Ok(())
        }
    }
}

/// Checks both certificates of a report and that they are consistent.
pub fn verify_report(g: &SimpleGraph, report: &SurfaceReport) -> Result<(), SurfaceError> {
    verify_certificate(g, report.invariant, &report.lower)?;
    verify_certificate(g, report.invariant, &report.upper)?;
    if report.lower_bound() > report.upper_bound() {
        return invalid("lower bound exceeds upper bound");
    }
    Ok(())
}

/// Surface value realised by an embedding for the given invariant.
pub(crate) fn embedding_value(
    g: &SimpleGraph,
    invariant: Invariant,
    embedding: &Embedding,
) -> Result<u32, SurfaceError> {
    let trace = match embedding {
        Embedding::Orientable { rotation } => trace_faces(g, rotation)?,
        Embedding::Signed { rotation } => trace_faces_signed(g, rotation)?,
    };
    match (invariant, trace.orientable) {
        (Invariant::Genus, true) => Ok((trace.euler_genus / 2) as u32),
        (Invariant::Crosscap, false) => Ok(trace.euler_genus as u32),
        (Invariant::Crosscap, true) if trace.euler_genus == 0 => Ok(0),
        (Invariant::Genus, false) => invalid("a non-orientable embedding bounds no genus"),
        (Invariant::Crosscap, true) => invalid("an orientable embedding of positive genus bounds no crosscap number"),
    }
}
