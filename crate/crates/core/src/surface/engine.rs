//! Backtracking search for cellular embeddings.
//!
//! Edges are inserted one at a time into a partial embedding. Every vertex
//! enters through a pendant edge from an already placed neighbour (which
//! keeps the partial embedding connected), after which its remaining edges
//! to placed vertices close cycles. A closing edge either splits a face,
//! merges two faces, or (signed search only) runs twisted through one face
//! without changing the face count. Tree edges are always positive, which
//! removes the local switching redundancy of signed rotation systems.

use crate::graph::SimpleGraph;

const NONE: u32 = u32::MAX;

/// Edge insertion order.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    n: usize,
    /// For a pendant edge `(a, b)`, `a` is placed and `b` is new.
    edges: Vec<(u32, u32)>,
    pendant: Vec<bool>,
    /// Closing edges with index `>= k`; one extra trailing zero.
    closing_from: Vec<i64>,
}

impl Plan {
    /// `g` must be connected with at least one edge.
    pub(crate) fn new(g: &SimpleGraph) -> Plan {
        let n = g.vertex_count();
        let mut order_pos = vec![usize::MAX; n];
        let mut placed_nbrs = vec![0usize; n];
        let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
        let mut edges = Vec::with_capacity(g.edge_count());
        let mut pendant = Vec::with_capacity(g.edge_count());
        order_pos[start] = 0;
        for &w in g.neighbors(start) {
            placed_nbrs[w] += 1;
        }
        for step in 1..n {
            let Some(w) = (0..n)
                .filter(|&v| order_pos[v] == usize::MAX && placed_nbrs[v] > 0)
                .max_by_key(|&v| (placed_nbrs[v], g.degree(v), std::cmp::Reverse(v)))
            else {
                break;
            };
            let mut back: Vec<usize> = g
                .neighbors(w)
                .iter()
                .copied()
                .filter(|&x| order_pos[x] != usize::MAX)
                .collect();
            back.sort_by_key(|&x| order_pos[x]);
            edges.push((back[0] as u32, w as u32));
            pendant.push(true);
            for &x in &back[1..] {
                edges.push((w as u32, x as u32));
                pendant.push(false);
            }
            order_pos[w] = step;
            for &x in g.neighbors(w) {
                placed_nbrs[x] += 1;
            }
        }
        let mut closing_from = vec![0i64; edges.len() + 1];
        for k in (0..edges.len()).rev() {
            closing_from[k] = closing_from[k + 1] + i64::from(!pendant[k]);
        }
        Plan {
            n,
            edges,
            pendant,
            closing_from,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Orientable,
    Signed,
}

/// Search request.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Goal {
    /// Minimum face count; `None` accepts the first completed embedding.
    pub target_faces: Option<i64>,
    /// Require at least one negative edge (signed mode).
    pub need_twist: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct Embedded {
    pub rotations: Vec<Vec<usize>>,
    /// `(u, v, sign)` with `u < v`.
    pub signs: Vec<(usize, usize, i8)>,
    pub faces: i64,
}

#[derive(Debug)]
pub(crate) enum Outcome {
    Found(Embedded),
    Exhausted,
    Aborted,
}

#[derive(Clone, Copy)]
struct Cand {
    ca: u32,
    cb: u32,
    sign: i8,
    delta: i8,
}

enum Flow {
    Done,
    Continue,
    Abort,
}

pub(crate) struct Search<'p> {
    plan: &'p Plan,
    mode: Mode,
    goal: Goal,
    succ: Vec<u32>,
    pred: Vec<u32>,
    any: Vec<u32>,
    deg: Vec<u32>,
    sign: Vec<i8>,
    negatives: u32,
    /// Vertices of degree at least three.
    branch_vertices: u32,
    mark: Vec<u32>,
    stamp: u32,
    corner_face: Vec<u32>,
    corner_primary: Vec<bool>,
    bufs: Vec<Vec<Cand>>,
    nodes: u64,
    budget: u64,
    found: Option<Embedded>,
}

impl<'p> Search<'p> {
    pub(crate) fn new(plan: &'p Plan, mode: Mode, goal: Goal, budget: u64) -> Self {
        let m = plan.edges.len();
        Search {
            plan,
            mode,
            goal,
            succ: vec![NONE; 2 * m],
            pred: vec![NONE; 2 * m],
            any: vec![NONE; plan.n],
            deg: vec![0; plan.n],
            sign: vec![1; m],
            negatives: 0,
            branch_vertices: 0,
            mark: vec![0; 4 * m],
            stamp: 0,
            corner_face: vec![0; 2 * m],
            corner_primary: vec![true; 2 * m],
            bufs: vec![Vec::new(); m + 1],
            nodes: 0,
            budget,
            found: None,
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    pub(crate) fn run(&mut self) -> Outcome {
        if self.plan.edges.is_empty() {
            return Outcome::Exhausted;
        }
        match self.dfs(0, 1) {
            Flow::Done => Outcome::Found(self.found.take().expect("solution recorded")),
            Flow::Continue => Outcome::Exhausted,
            Flow::Abort => Outcome::Aborted,
        }
    }

    fn tail(&self, d: u32) -> u32 {
        let (a, b) = self.plan.edges[(d >> 1) as usize];
        if d & 1 == 0 {
            a
        } else {
            b
        }
    }

    fn link(&mut self, d: u32, v: u32, corner: u32) {
        let (du, vu) = (d as usize, v as usize);
        if corner == NONE {
            self.succ[du] = d;
            self.pred[du] = d;
            self.any[vu] = d;
        } else {
            let s = self.succ[corner as usize];
            self.succ[corner as usize] = d;
            self.pred[du] = corner;
            self.succ[du] = s;
            self.pred[s as usize] = d;
        }
        self.deg[vu] += 1;
        if self.deg[vu] == 3 {
            self.branch_vertices += 1;
        }
    }

    fn unlink(&mut self, d: u32, v: u32) {
        let (du, vu) = (d as usize, v as usize);
        if self.deg[vu] == 3 {
            self.branch_vertices -= 1;
        }
        self.deg[vu] -= 1;
        if self.deg[vu] == 0 {
            self.any[vu] = NONE;
        } else {
            let (p, s) = (self.pred[du], self.succ[du]);
            self.succ[p as usize] = s;
            self.pred[s as usize] = p;
            if self.any[vu] == d {
                self.any[vu] = s;
            }
        }
    }

    /// Traces the faces of the first `k` edges, recording the face of every
    /// corner (named by the dart it follows). Returns the face count.
    fn trace(&mut self, k: usize) -> i64 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|x| *x = 0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        let darts = 2 * k as u32;
        let mut faces = 0u32;
        match self.mode {
            Mode::Orientable => {
                for d in 0..darts {
                    if self.mark[d as usize] == stamp {
                        continue;
                    }
                    let mut c = d;
                    loop {
                        self.mark[c as usize] = stamp;
                        let r = c ^ 1;
                        self.corner_face[r as usize] = faces;
                        c = self.succ[r as usize];
                        if c == d {
                            break;
                        }
                    }
                    faces += 1;
                }
            }
            Mode::Signed => {
                for d in 0..darts {
                    for o in [1i8, -1] {
                        if self.mark[state(d, o)] == stamp {
                            continue;
                        }
                        self.walk(d, o, faces, true);
                        let (rd, ro) = (d ^ 1, -o * self.sign[(d >> 1) as usize]);
                        self.walk(rd, ro, faces, false);
                        faces += 1;
                    }
                }
            }
        }
        i64::from(faces)
    }

    fn walk(&mut self, d0: u32, o0: i8, face: u32, primary: bool) {
        let stamp = self.stamp;
        let (mut d, mut o) = (d0, o0);
        loop {
            debug_assert_ne!(self.mark[state(d, o)], stamp);
            self.mark[state(d, o)] = stamp;
            let o2 = o * self.sign[(d >> 1) as usize];
            let r = d ^ 1;
            let next = if o2 > 0 {
                self.corner_face[r as usize] = face;
                self.corner_primary[r as usize] = primary;
                self.succ[r as usize]
            } else {
                self.pred[r as usize]
            };
            d = next;
            o = o2;
            if d == d0 && o == o0 {
                break;
            }
        }
    }

    /// Corners at `v`, each named by the dart it follows.
    fn corners(&self, v: u32, restrict: bool, out: &mut Vec<u32>) {
        out.clear();
        let start = self.any[v as usize];
        if start == NONE {
            out.push(NONE);
            return;
        }
        let mut d = start;
        loop {
            out.push(d);
            d = self.succ[d as usize];
            if d == start {
                break;
            }
        }
        if restrict && out.len() == 2 {
            // The two ways of adding a third dart are mirror images.
            let m = *out.iter().min().unwrap();
            out.clear();
            out.push(m);
        }
    }

    fn candidates(&self, k: usize, out: &mut Vec<Cand>) {
        out.clear();
        let (a, b) = self.plan.edges[k];
        let mirror_free = self.branch_vertices == 0;
        let mut ca_list = Vec::new();
        let mut cb_list = Vec::new();
        if self.plan.pendant[k] {
            self.corners(a, mirror_free, &mut ca_list);
            out.extend(ca_list.iter().map(|&ca| Cand {
                ca,
                cb: NONE,
                sign: 1,
                delta: 0,
            }));
            return;
        }
        let restrict_a = mirror_free && self.deg[a as usize] == 2;
        let restrict_b = mirror_free && !restrict_a && self.deg[b as usize] == 2;
        self.corners(a, restrict_a, &mut ca_list);
        self.corners(b, restrict_b, &mut cb_list);
        let signed = self.mode == Mode::Signed;
        for &ca in &ca_list {
            for &cb in &cb_list {
                let (fa, fb) = (self.corner_face[ca as usize], self.corner_face[cb as usize]);
                if fa == fb {
                    let same = self.corner_primary[ca as usize] == self.corner_primary[cb as usize];
                    let split = if same { 1 } else { -1 };
                    out.push(Cand {
                        ca,
                        cb,
                        sign: split,
                        delta: 1,
                    });
                    if signed {
                        out.push(Cand {
                            ca,
                            cb,
                            sign: -split,
                            delta: 0,
                        });
                    }
                } else {
                    out.push(Cand {
                        ca,
                        cb,
                        sign: 1,
                        delta: -1,
                    });
                    if signed {
                        out.push(Cand {
                            ca,
                            cb,
                            sign: -1,
                            delta: -1,
                        });
                    }
                }
            }
        }
        out.sort_by_key(|c| -c.delta);
    }

    fn admissible(&self, k: usize, faces: i64, c: &Cand) -> bool {
        let after = faces + i64::from(c.delta);
        let closing_left = self.plan.closing_from[k + 1];
        let negatives = self.negatives + u32::from(c.sign < 0);
        let needs_more_twist = self.goal.need_twist && negatives == 0;
        if needs_more_twist && closing_left == 0 {
            return false;
        }
        match self.goal.target_faces {
            None => true,
            Some(t) => {
                // A first negative edge never splits a face.
                let cost = i64::from(needs_more_twist);
                after + closing_left - cost >= t
            }
        }
    }

    fn dfs(&mut self, k: usize, faces: i64) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Abort;
        }
        let faces = if k == 0 { faces } else { self.trace(k) };
        if k == self.plan.edges.len() {
            let ok = (!self.goal.need_twist || self.negatives > 0)
                && self.goal.target_faces.is_none_or(|t| faces >= t);
            if ok {
                self.found = Some(self.snapshot(faces));
                return Flow::Done;
            }
            return Flow::Continue;
        }
        let mut buf = std::mem::take(&mut self.bufs[k]);
        if k == 0 {
            buf.clear();
            buf.push(Cand {
                ca: NONE,
                cb: NONE,
                sign: 1,
                delta: 0,
            });
        } else {
            self.candidates(k, &mut buf);
        }
        let mut flow = Flow::Continue;
        let (a, b) = self.plan.edges[k];
        let d = 2 * k as u32;
        for c in buf.iter() {
            if !self.admissible(k, faces, c) {
                continue;
            }
            self.link(d, a, c.ca);
            self.link(d + 1, b, c.cb);
            self.sign[k] = c.sign;
            if c.sign < 0 {
                self.negatives += 1;
            }
            let r = self.dfs(k + 1, faces + i64::from(c.delta));
            if c.sign < 0 {
                self.negatives -= 1;
            }
            self.sign[k] = 1;
            self.unlink(d + 1, b);
            self.unlink(d, a);
            match r {
                Flow::Continue => {}
                other => {
                    flow = other;
                    break;
                }
            }
        }
        self.bufs[k] = buf;
        flow
    }

    fn snapshot(&self, faces: i64) -> Embedded {
        let mut rotations = vec![Vec::new(); self.plan.n];
        for (v, rot) in rotations.iter_mut().enumerate() {
            let start = self.any[v];
            if start == NONE {
                continue;
            }
            let mut d = start;
            loop {
                rot.push(self.tail(d ^ 1) as usize);
                d = self.succ[d as usize];
                if d == start {
                    break;
                }
            }
        }
        let mut signs: Vec<(usize, usize, i8)> = self
            .plan
            .edges
            .iter()
            .zip(&self.sign)
            .map(|(&(a, b), &s)| ((a.min(b)) as usize, (a.max(b)) as usize, s))
            .collect();
        signs.sort_unstable();
        Embedded {
            rotations,
            signs,
            faces,
        }
    }
}

fn state(d: u32, o: i8) -> usize {
    2 * d as usize + usize::from(o < 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn best_faces(g: &SimpleGraph, mode: Mode, need_twist: bool) -> i64 {
        let plan = Plan::new(g);
        let mut best = i64::MIN;
        // increase the target until the search fails
        for t in 1.. {
            let goal = Goal {
                target_faces: Some(t),
                need_twist,
            };
            match Search::new(&plan, mode, goal, u64::MAX).run() {
                Outcome::Found(e) => best = e.faces,
                _ => break,
            }
        }
        best
    }

    #[test]
    fn plan_is_spanning() {
        let g = SimpleGraph::complete_bipartite(3, 4);
        let p = Plan::new(&g);
        assert_eq!(p.edges.len(), 12);
        assert_eq!(p.pendant.iter().filter(|&&x| x).count(), 6);
        assert_eq!(p.closing_from[0], 6);
    }

    #[test]
    fn maximum_face_counts() {
        // K4 planar: 4 faces; K5 on the torus: 5 faces; K33: 3 faces.
        assert_eq!(best_faces(&SimpleGraph::complete(4), Mode::Orientable, false), 4);
        assert_eq!(best_faces(&SimpleGraph::complete(5), Mode::Orientable, false), 5);
        assert_eq!(best_faces(&SimpleGraph::complete_bipartite(3, 3), Mode::Orientable, false), 3);
        // projective plane: K6 triangulates it (f = 10), K5 has f = 6
        assert_eq!(best_faces(&SimpleGraph::complete(6), Mode::Signed, true), 10);
        assert_eq!(best_faces(&SimpleGraph::complete(5), Mode::Signed, true), 6);
        // planar graphs still need one crosscap when twisted
        assert_eq!(best_faces(&SimpleGraph::complete(4), Mode::Signed, true), 3);
    }
}
