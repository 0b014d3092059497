//! Rotation systems and face tracing.
//!
//! A rotation lists, for every vertex, its neighbours in cyclic order. A
//! signed rotation system adds a sign per edge; negative edges flip the
//! local orientation when a face walk crosses them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::SurfaceError;
use crate::graph::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    /// `rotations[v]` is the cyclic order of the neighbours of `v`.
    pub rotations: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSign {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedRotationSystem {
    pub rotations: Vec<Vec<usize>>,
    /// One entry per edge, `u < v`.
    pub signs: Vec<EdgeSign>,
}

impl SignedRotationSystem {
    /// All signs positive.
    pub fn from_orientable(rot: &RotationSystem, g: &SimpleGraph) -> Self {
        SignedRotationSystem {
            rotations: rot.rotations.clone(),
            signs: g.edges().map(|(u, v)| EdgeSign { u, v, sign: 1 }).collect(),
        }
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.signs.iter().filter(|s| s.sign < 0).map(|s| (s.u, s.v))
    }
}

/// Faces of an embedding, each given as its cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTrace {
    pub faces: Vec<Vec<usize>>,
    /// `2 - v + e - f`: twice the genus for orientable embeddings, the
    /// crosscap number of the surface otherwise.
    pub euler_genus: i64,
    pub orientable: bool,
}

impl FaceTrace {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Genus of the orientable surface, or crosscap number of the
    /// non-orientable one.
    pub fn surface_value(&self) -> i64 {
        if self.orientable {
            self.euler_genus / 2
        } else {
            self.euler_genus
        }
    }
}

/// Position of each neighbour inside each rotation.
fn positions(g: &SimpleGraph, rotations: &[Vec<usize>]) -> Result<Vec<HashMap<usize, usize>>, SurfaceError> {
    let n = g.vertex_count();
    if rotations.len() != n {
        return Err(SurfaceError::MalformedRotation(format!(
            "{} rotations for {n} vertices",
            rotations.len()
        )));
    }
    let mut pos = Vec::with_capacity(n);
    for (v, rot) in rotations.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(SurfaceError::MalformedRotation(format!(
                "rotation at {v} is not a permutation of its neighbours"
            )));
        }
        pos.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
    }
    Ok(pos)
}

fn require_connected(g: &SimpleGraph) -> Result<(), SurfaceError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SurfaceError::Disconnected)
    }
}

/// Traces the faces of an orientable embedding.
pub fn trace_faces(g: &SimpleGraph, rot: &RotationSystem) -> Result<FaceTrace, SurfaceError> {
    require_connected(g)?;
    let pos = positions(g, &rot.rotations)?;
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut faces = Vec::new();
    for (u, v) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        if seen.contains_key(&(u, v)) {
            continue;
        }
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        loop {
            seen.insert((a, b), ());
            face.push(a);
            let rb = &rot.rotations[b];
            let next = rb[(pos[b][&a] + 1) % rb.len()];
            a = b;
            b = next;
            if (a, b) == (u, v) {
                break;
            }
        }
        faces.push(face);
    }
    let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
    let f = if m == 0 { 1 } else { faces.len() as i64 };
    let euler_genus = 2 - n + m - f;
    if euler_genus < 0 || euler_genus % 2 != 0 {
        return Err(SurfaceError::MalformedRotation(format!(
            "inconsistent face count {f} for v = {n}, e = {m}"
        )));
    }
    if m == 0 {
        faces.push(vec![0]);
    }
    Ok(FaceTrace {
        faces,
        euler_genus,
        orientable: true,
    })
}

/// Traces the faces of a signed rotation system and decides orientability.
pub fn trace_faces_signed(g: &SimpleGraph, srot: &SignedRotationSystem) -> Result<FaceTrace, SurfaceError> {
    require_connected(g)?;
    let pos = positions(g, &srot.rotations)?;
    let mut sign: HashMap<(usize, usize), i8> = HashMap::new();
    for s in &srot.signs {
        if !g.has_edge(s.u, s.v) || (s.sign != 1 && s.sign != -1) {
            return Err(SurfaceError::MalformedRotation(format!(
                "bad sign entry {}-{}: {}",
                s.u, s.v, s.sign
            )));
        }
        sign.insert((s.u.min(s.v), s.u.max(s.v)), s.sign);
    }
    if sign.len() != g.edge_count() {
        return Err(SurfaceError::MalformedRotation(
            "signs must cover every edge exactly once".into(),
        ));
    }
    let sigma = |a: usize, b: usize| sign[&(a.min(b), a.max(b))];
    // A state is (tail, head, orientation); every face is met as two
    // mutually reverse orbits.
    let mut seen: HashMap<(usize, usize, i8), ()> = HashMap::new();
    let step = |a: usize, b: usize, o: i8| -> (usize, usize, i8) {
        let o2 = o * sigma(a, b);
        let rb = &srot.rotations[b];
        let d = rb.len();
        let i = pos[b][&a];
        let next = if o2 > 0 { rb[(i + 1) % d] } else { rb[(i + d - 1) % d] };
        (b, next, o2)
    };
    let mut faces = Vec::new();
    for (u, v) in g.edges().flat_map(|(u, v)| [(u, v), (v, u)]) {
        for o in [1i8, -1] {
            if seen.contains_key(&(u, v, o)) {
                continue;
            }
            let mut face = Vec::new();
            let mut s = (u, v, o);
            loop {
                seen.insert(s, ());
                face.push(s.0);
                s = step(s.0, s.1, s.2);
                if s == (u, v, o) {
                    break;
                }
            }
            // mark the reverse orbit
            let start = (v, u, -o * sigma(u, v));
            let mut s = start;
            loop {
                if seen.insert(s, ()).is_some() {
                    return Err(SurfaceError::MalformedRotation(
                        "face walk met its own reverse".into(),
                    ));
                }
                s = step(s.0, s.1, s.2);
                if s == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
    if m == 0 {
        faces.push(vec![0]);
    }
    let euler_genus = 2 - n + m - faces.len() as i64;
    let orientable = is_balanced(g, &sigma);
    if euler_genus < 0 || (orientable && euler_genus % 2 != 0) {
        return Err(SurfaceError::MalformedRotation(format!(
            "inconsistent face count {} for v = {n}, e = {m}",
            faces.len()
        )));
    }
    Ok(FaceTrace {
        faces,
        euler_genus,
        orientable,
    })
}

/// Every cycle carries an even number of negative edges.
fn is_balanced(g: &SimpleGraph, sigma: &dyn Fn(usize, usize) -> i8) -> bool {
    let n = g.vertex_count();
    let mut side = vec![0i8; n];
    for s in 0..n {
        if side[s] != 0 {
            continue;
        }
        side[s] = 1;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let want = side[u] * sigma(u, w);
                if side[w] == 0 {
                    side[w] = want;
                    stack.push(w);
                } else if side[w] != want {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_planar() -> RotationSystem {
        // straight-line drawing: triangle 0,1,2 with 3 in the middle
        RotationSystem {
            rotations: vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        }
    }

    #[test]
    fn k4_planar_has_four_faces() {
        let g = SimpleGraph::complete(4);
        let t = trace_faces(&g, &k4_planar()).unwrap();
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.surface_value(), 0);
    }

    #[test]
    fn c4_two_faces() {
        let g = SimpleGraph::cycle(4);
        let rot = RotationSystem {
            rotations: (0..4).map(|i| vec![(i + 1) % 4, (i + 3) % 4]).collect(),
        };
        let t = trace_faces(&g, &rot).unwrap();
        assert_eq!((t.face_count(), t.surface_value()), (2, 0));
    }

    #[test]
    fn k33_never_planar() {
        let g = SimpleGraph::complete_bipartite(3, 3);
        // every rotation of K33: each vertex has 2 cyclic orders
        for mask in 0u32..64 {
            let rotations = (0..6)
                .map(|v| {
                    let mut ns = g.neighbors(v).to_vec();
                    if mask >> v & 1 == 1 {
                        ns.swap(1, 2);
                    }
                    ns
                })
                .collect();
            let t = trace_faces(&g, &RotationSystem { rotations }).unwrap();
            assert!(t.face_count() <= 3);
            assert!(t.surface_value() >= 1);
        }
    }

    #[test]
    fn positive_signs_agree_with_orientable_tracing() {
        let g = SimpleGraph::complete(4);
        let s = SignedRotationSystem::from_orientable(&k4_planar(), &g);
        let t = trace_faces_signed(&g, &s).unwrap();
        assert!(t.orientable);
        assert_eq!(t.face_count(), 4);
    }

    #[test]
    fn one_twisted_edge_makes_a_crosscap() {
        let g = SimpleGraph::complete(4);
        let mut s = SignedRotationSystem::from_orientable(&k4_planar(), &g);
        s.signs[0].sign = -1;
        let t = trace_faces_signed(&g, &s).unwrap();
        assert!(!t.orientable);
        assert_eq!(t.face_count(), 3);
        assert_eq!(t.surface_value(), 1);
    }

    #[test]
    fn malformed_rotation() {
        let g = SimpleGraph::complete(4);
        let mut rot = k4_planar();
        rot.rotations[0] = vec![1, 2];
        assert!(matches!(trace_faces(&g, &rot), Err(SurfaceError::MalformedRotation(_))));
    }
}
