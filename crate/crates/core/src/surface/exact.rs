//! Exact genus and crosscap number by iterative deepening.

use super::blocks::blocks;
use super::bounds::euler_lower_bounds;
use super::certificate::{BlockReport, Embedding, Invariant, SurfaceCertificate, SurfaceReport};
use super::engine::{Embedded, Goal, Mode, Outcome, Plan, Search};
use super::rotation::{trace_faces_signed, EdgeSign, RotationSystem, SignedRotationSystem};
use super::SurfaceError;
use crate::graph::SimpleGraph;

fn euler_cert(g: &SimpleGraph, invariant: Invariant) -> Result<SurfaceCertificate, SurfaceError> {
    let (gl, cl) = euler_lower_bounds(g)?;
    Ok(SurfaceCertificate::EulerBound {
        value: match invariant {
            Invariant::Genus => gl,
            Invariant::Crosscap => cl,
        },
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        girth: g.girth(),
    })
}

fn orientable_cert(e: Embedded, value: u32) -> SurfaceCertificate {
    SurfaceCertificate::Embedding {
        value,
        embedding: Embedding::Orientable {
            rotation: RotationSystem { rotations: e.rotations },
        },
    }
}

fn signed_cert(e: Embedded, value: u32) -> SurfaceCertificate {
    SurfaceCertificate::Embedding {
        value,
        embedding: Embedding::Signed {
            rotation: SignedRotationSystem {
                rotations: e.rotations,
                signs: e.signs.into_iter().map(|(u, v, sign)| EdgeSign { u, v, sign }).collect(),
            },
        },
    }
}

/// The embedding of a graph without edges.
fn trivial(g: &SimpleGraph, invariant: Invariant) -> Result<SurfaceReport, SurfaceError> {
    Ok(SurfaceReport {
        invariant,
        lower: euler_cert(g, invariant)?,
        upper: SurfaceCertificate::Embedding {
            value: 0,
            embedding: Embedding::Orientable {
                rotation: RotationSystem {
                    rotations: vec![Vec::new(); g.vertex_count()],
                },
            },
        },
        nodes: 0,
    })
}

fn euler_genus_of(g: &SimpleGraph, faces: i64) -> i64 {
    2 - g.vertex_count() as i64 + g.edge_count() as i64 - faces
}

/// Orientable genus of a connected graph, searching at most `budget` nodes.
pub fn genus_exact(g: &SimpleGraph, budget: u64) -> Result<SurfaceReport, SurfaceError> {
    genus_search(g, budget, None, u32::MAX)
}

/// As [`genus_exact`], starting from an externally certified lower bound
/// when it beats the Euler bound.
pub fn genus_exact_from(
    g: &SimpleGraph,
    budget: u64,
    known_lower: Option<SurfaceCertificate>,
) -> Result<SurfaceReport, SurfaceError> {
    genus_search(g, budget, known_lower, u32::MAX)
}

/// Decides the genus if it is at most `ceiling`; otherwise stops once the
/// lower bound exceeds `ceiling`.
pub fn genus_up_to(g: &SimpleGraph, budget: u64, ceiling: u32) -> Result<SurfaceReport, SurfaceError> {
    genus_search(g, budget, None, ceiling)
}

fn genus_search(
    g: &SimpleGraph,
    budget: u64,
    known_lower: Option<SurfaceCertificate>,
    ceiling: u32,
) -> Result<SurfaceReport, SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    if g.edge_count() == 0 {
        return trivial(g, Invariant::Genus);
    }
    let mut lower = euler_cert(g, Invariant::Genus)?;
    if let Some(k) = known_lower {
        if k.value() > lower.value() {
            lower = k;
        }
    }
    let plan = Plan::new(g);
    let greedy = first_embedding(&plan, Mode::Orientable, false);
    let ub = (euler_genus_of(g, greedy.faces) / 2) as u32;
    let mut upper = orientable_cert(greedy, ub);
    let mut nodes = 0;
    let mut t = lower.value();
    while t < upper.value() && t <= ceiling {
        let goal = Goal {
            target_faces: Some(euler_genus_of(g, 0) - 2 * i64::from(t)),
            need_twist: false,
        };
        let mut s = Search::new(&plan, Mode::Orientable, goal, budget.saturating_sub(nodes));
        let outcome = s.run();
        nodes += s.nodes();
        match outcome {
            Outcome::Found(e) => {
                let v = (euler_genus_of(g, e.faces) / 2) as u32;
                upper = orientable_cert(e, v);
                break;
            }
            Outcome::Exhausted => {
                t += 1;
                lower = SurfaceCertificate::ExhaustiveSearch { value: t, nodes };
            }
            Outcome::Aborted => break,
        }
    }
    Ok(SurfaceReport {
        invariant: Invariant::Genus,
        lower,
        upper,
        nodes,
    })
}

fn first_embedding(plan: &Plan, mode: Mode, need_twist: bool) -> Embedded {
    let goal = Goal {
        target_faces: None,
        need_twist,
    };
    match Search::new(plan, mode, goal, u64::MAX).run() {
        Outcome::Found(e) => e,
        other => unreachable!("unpruned search always completes: {other:?}"),
    }
}

/// Twisting an edge that separates two faces of an orientable embedding
/// merges them: a non-orientable embedding with one more crosscap than
/// twice the genus.
fn twist_one_edge(g: &SimpleGraph, e: &Embedded) -> Option<(Embedded, i64)> {
    let mut signed = SignedRotationSystem {
        rotations: e.rotations.clone(),
        signs: e.signs.iter().map(|&(u, v, _)| EdgeSign { u, v, sign: 1 }).collect(),
    };
    for i in 0..signed.signs.len() {
        signed.signs[i].sign = -1;
        if let Ok(t) = trace_faces_signed(g, &signed) {
            if t.face_count() as i64 == e.faces - 1 {
                let mut out = e.clone();
                out.signs[i].2 = -1;
                out.faces -= 1;
                return Some((out, t.euler_genus));
            }
        }
        signed.signs[i].sign = 1;
    }
    None
}

/// Crosscap number of a connected graph, searching at most `budget` nodes.
pub fn crosscap_exact(g: &SimpleGraph, budget: u64) -> Result<SurfaceReport, SurfaceError> {
    crosscap_search(g, budget, u32::MAX)
}

/// Decides the crosscap number if it is at most `ceiling`; otherwise stops
/// once the lower bound exceeds `ceiling`.
pub fn crosscap_up_to(g: &SimpleGraph, budget: u64, ceiling: u32) -> Result<SurfaceReport, SurfaceError> {
    crosscap_search(g, budget, ceiling)
}

fn crosscap_search(g: &SimpleGraph, budget: u64, ceiling: u32) -> Result<SurfaceReport, SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    if g.edge_count() == 0 {
        return trivial(g, Invariant::Crosscap);
    }
    let plan = Plan::new(g);
    let mut lower = euler_cert(g, Invariant::Crosscap)?;
    let mut nodes = 0;
    let report = |lower, upper, nodes| SurfaceReport {
        invariant: Invariant::Crosscap,
        lower,
        upper,
        nodes,
    };
    if g.edge_count() + 1 == g.vertex_count() {
        // trees are planar
        let e = first_embedding(&plan, Mode::Orientable, false);
        return Ok(report(lower, orientable_cert(e, 0), nodes));
    }
    let greedy = first_embedding(&plan, Mode::Signed, true);
    let mut ub = euler_genus_of(g, greedy.faces);
    let mut best = greedy;
    if let Some((e, eg)) = twist_one_edge(g, &first_embedding(&plan, Mode::Orientable, false)) {
        if eg < ub {
            ub = eg;
            best = e;
        }
    }
    let mut upper = signed_cert(best, ub as u32);
    if lower.value() == 0 {
        let goal = Goal {
            target_faces: Some(euler_genus_of(g, 0)),
            need_twist: false,
        };
        let mut s = Search::new(&plan, Mode::Orientable, goal, budget);
        let outcome = s.run();
        nodes += s.nodes();
        match outcome {
            Outcome::Found(e) => return Ok(report(lower, orientable_cert(e, 0), nodes)),
            Outcome::Exhausted => lower = SurfaceCertificate::ExhaustiveSearch { value: 1, nodes },
            Outcome::Aborted => return Ok(report(lower, upper, nodes)),
        }
    }
    let mut k = lower.value();
    while k < upper.value() && k <= ceiling {
        let goal = Goal {
            target_faces: Some(euler_genus_of(g, 0) - i64::from(k)),
            need_twist: true,
        };
        let mut s = Search::new(&plan, Mode::Signed, goal, budget.saturating_sub(nodes));
        let outcome = s.run();
        nodes += s.nodes();
        match outcome {
            Outcome::Found(e) => {
                let v = euler_genus_of(g, e.faces) as u32;
                upper = signed_cert(e, v);
                break;
            }
            Outcome::Exhausted => {
                k += 1;
                lower = SurfaceCertificate::ExhaustiveSearch { value: k, nodes };
            }
            Outcome::Aborted => break,
        }
    }
    Ok(report(lower, upper, nodes))
}

/// Genus via the block decomposition: the genus of a graph is the sum of
/// the genera of its blocks.
pub fn genus_of(g: &SimpleGraph, budget: u64) -> Result<SurfaceReport, SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    let parts = blocks(g);
    if parts.len() <= 1 {
        return genus_exact(g, budget);
    }
    let mut nodes = 0;
    let mut reports = Vec::with_capacity(parts.len());
    for vs in parts {
        let sub = g.induced(&vs);
        let genus = genus_exact(&sub, budget.saturating_sub(nodes))?;
        nodes += genus.nodes;
        reports.push(BlockReport {
            vertices: vs,
            genus,
            crosscap: None,
        });
    }
    let (lb, ub) = compose_genus(&reports);
    composite(g, Invariant::Genus, reports, lb, ub, nodes)
}

/// Crosscap number via the block decomposition.
pub fn crosscap_of(g: &SimpleGraph, budget: u64) -> Result<SurfaceReport, SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    let parts = blocks(g);
    if parts.len() <= 1 {
        return crosscap_exact(g, budget);
    }
    let mut nodes = 0;
    let mut reports = Vec::with_capacity(parts.len());
    for vs in parts {
        let sub = g.induced(&vs);
        let genus = genus_exact(&sub, budget.saturating_sub(nodes))?;
        nodes += genus.nodes;
        let crosscap = crosscap_exact(&sub, budget.saturating_sub(nodes))?;
        nodes += crosscap.nodes;
        reports.push(BlockReport {
            vertices: vs,
            genus,
            crosscap: Some(crosscap),
        });
    }
    let (lb, ub) = compose_crosscap(&reports);
    composite(g, Invariant::Crosscap, reports, lb, ub, nodes)
}

fn composite(
    g: &SimpleGraph,
    invariant: Invariant,
    reports: Vec<BlockReport>,
    lb: u32,
    ub: u32,
    nodes: u64,
) -> Result<SurfaceReport, SurfaceError> {
    let euler = euler_cert(g, invariant)?;
    let lower = if euler.value() > lb {
        euler
    } else {
        SurfaceCertificate::BlockComposition {
            value: lb,
            blocks: reports.clone(),
        }
    };
    Ok(SurfaceReport {
        invariant,
        lower,
        upper: SurfaceCertificate::BlockComposition { value: ub, blocks: reports },
        nodes,
    })
}

fn cr(b: &BlockReport) -> &SurfaceReport {
    b.crosscap.as_ref().expect("crosscap report per block")
}

pub(crate) fn compose_genus(parts: &[BlockReport]) -> (u32, u32) {
    parts.iter().fold((0, 0), |(l, u), b| {
        (l + b.genus.lower_bound(), u + b.genus.upper_bound())
    })
}

/// Bounds on the crosscap number from per-block genus and crosscap bounds.
///
/// Euler genus (the minimum of twice the genus and the crosscap number) is
/// additive over blocks. A graph whose every nonplanar block needs one more
/// crosscap than twice its genus has crosscap number one more than its
/// Euler genus; otherwise the two agree. Planar blocks never force the
/// extra crosscap.
pub(crate) fn compose_crosscap(parts: &[BlockReport]) -> (u32, u32) {
    let all_exact = parts.iter().all(|b| b.genus.is_exact() && cr(b).is_exact());
    let eg = |g: u32, c: u32| (2 * g).min(c);
    // upper bound by construction: glue the cheapest embedding of each block
    let mut ub_sum = 0;
    let mut nonorientable = false;
    for b in parts {
        let (g, c) = (b.genus.upper_bound(), cr(b).upper_bound());
        ub_sum += eg(g, c);
        if c > 0 && c <= 2 * g {
            nonorientable = true;
        }
    }
    let ub = if nonorientable || ub_sum == 0 { ub_sum } else { ub_sum + 1 };
    if all_exact {
        return (ub, ub);
    }
    let lb_sum: u32 = parts
        .iter()
        .map(|b| eg(b.genus.lower_bound(), cr(b).lower_bound()))
        .sum();
    let lb_max = parts.iter().map(|b| cr(b).lower_bound()).max().unwrap_or(0);
    (lb_sum.max(lb_max).min(ub), ub)
}
