//! Finite local rings abstracted as their lattice of ideals under sum.
//!
//! Element 0 is always the zero ideal and the last element is the whole
//! ring. The join table gives `I + J`; the order it induces is inclusion.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Unvalidated lattice data, as read from a ring-spec file or built in code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawLattice {
    pub name: String,
    pub elements: Vec<String>,
    pub join: Vec<Vec<usize>>,
    pub maximal: usize,
}

/// A semilattice axiom that a join table can violate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    Commutativity,
    Associativity,
    Idempotence,
    ZeroNeutral,
    TopAbsorbing,
    PartialOrder,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("join table must be {expected}x{expected}")]
    NotSquare { expected: usize },
    #[error("index out of range: {what}")]
    BadIndex { what: String },
    #[error("not a join-semilattice, violated: {violations:?}")]
    NotASemilattice { violations: Vec<Axiom> },
    #[error("not local: ideal `{element}` is not contained in the maximal ideal")]
    NotLocal { element: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// Built-in local ring templates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// A finite field: ideals `0 < F`.
    Field,
    /// A chain ring with `k` nontrivial ideals, e.g. `Z/p^(k+1)`.
    Chain { k: u32 },
    /// Two-generator local ring with `M = <x, y>`, `x^2 = y^2 = 0`, `M^2 = <xy>`
    /// and residue field of size `q`.
    TwogenXy { q: u32 },
    /// Two-generator local ring with `M^2 = 0` and residue field of size `q`.
    TwogenFlat { q: u32 },
}

impl Family {
    /// Short human-readable tag, e.g. `chain(2)`.
    pub fn tag(&self) -> String {
        match self {
            Family::Field => "F".to_string(),
            Family::Chain { k } => format!("chain({k})"),
            Family::TwogenXy { q } => format!("twogen_xy({q})"),
            Family::TwogenFlat { q } => format!("twogen_flat({q})"),
        }
    }

    /// Number of lattice elements, including zero and the whole ring.
    pub fn element_count(&self) -> usize {
        match *self {
            Family::Field => 2,
            Family::Chain { k } => k as usize + 2,
            Family::TwogenXy { q } => q as usize + 5,
            Family::TwogenFlat { q } => q as usize + 4,
        }
    }
}

/// A validated ideal lattice of a finite local ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    name: String,
    labels: Vec<String>,
    join: Vec<usize>,
    maximal: usize,
}

impl IdealLattice {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Number of elements, zero and whole ring included.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Index of the whole ring.
    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    /// Index of the maximal ideal (0 for a field).
    pub fn maximal(&self) -> usize {
        self.maximal
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.labels.len() + j]
    }

    /// Inclusion order: `i <= j` iff `i + j = j`.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.join(i, j) == j
    }

    pub fn is_field(&self) -> bool {
        self.len() == 2
    }

    /// Number of ideals strictly between zero and the whole ring.
    pub fn nontrivial_count(&self) -> usize {
        self.len() - 2
    }

    /// True iff the inclusion order is total.
    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// True iff the maximal ideal is the sum of two strictly smaller ideals.
    pub fn maximal_decomposes(&self) -> bool {
        let m = self.maximal;
        let below: Vec<usize> = (0..self.len()).filter(|&i| i != m && self.leq(i, m)).collect();
        below
            .iter()
            .any(|&a| below.iter().any(|&b| self.join(a, b) == m))
    }

    pub fn to_raw(&self) -> RawLattice {
        let n = self.len();
        RawLattice {
            name: self.name.clone(),
            elements: self.labels.clone(),
            join: (0..n).map(|i| (0..n).map(|j| self.join(i, j)).collect()).collect(),
            maximal: self.maximal,
        }
    }

    /// Join table rewritten under the canonical relabelling; label independent.
    pub(crate) fn canonical_table(&self) -> Vec<usize> {
        let n = self.len();
        if n <= 2 {
            return self.join.clone();
        }
        // Order invariants: (#below, #above). Middle elements are permuted only
        // within classes of equal invariants.
        let sig = |i: usize| {
            let below = (0..n).filter(|&j| self.leq(j, i)).count();
            let above = (0..n).filter(|&j| self.leq(i, j)).count();
            (below, above)
        };
        let mut middle: Vec<usize> = (1..n - 1).collect();
        middle.sort_by_key(|&i| (sig(i), i));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &i in &middle {
            match groups.last_mut() {
                Some(g) if sig(g[0]) == sig(i) => g.push(i),
                _ => groups.push(vec![i]),
            }
        }
        let mut best: Option<Vec<usize>> = None;
        let mut order = Vec::with_capacity(n);
        permute_groups(&groups, 0, &mut order, &mut |mid| {
            // position of each old index in the new labelling
            let mut pos = vec![0usize; n];
            pos[n - 1] = n - 1;
            for (k, &old) in mid.iter().enumerate() {
                pos[old] = k + 1;
            }
            let mut inv = vec![0usize; n];
            for (old, &p) in pos.iter().enumerate() {
                inv[p] = old;
            }
            let table: Vec<usize> = (0..n * n)
                .map(|c| pos[self.join(inv[c / n], inv[c % n])])
                .collect();
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        });
        best.expect("at least one permutation")
    }
}

fn permute_groups(
    groups: &[Vec<usize>],
    gi: usize,
    acc: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if gi == groups.len() {
        visit(acc);
        return;
    }
    let mut g = groups[gi].clone();
    heap_permutations(&mut g, 0, &mut |perm| {
        let base = acc.len();
        acc.extend_from_slice(perm);
        permute_groups(groups, gi + 1, acc, visit);
        acc.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        heap_permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Checks every axiom exhaustively and returns the validated lattice.
pub fn validate_lattice(raw: RawLattice) -> Result<IdealLattice, LatticeError> {
    let n = raw.elements.len();
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if raw.join.len() != n || raw.join.iter().any(|row| row.len() != n) {
        return Err(LatticeError::NotSquare { expected: n });
    }
    for (i, row) in raw.join.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(LatticeError::BadIndex {
                    what: format!("join[{i}][{j}] = {v}"),
                });
            }
        }
    }
    if raw.maximal >= n {
        return Err(LatticeError::BadIndex {
            what: format!("maximal = {}", raw.maximal),
        });
    }
    let j = |a: usize, b: usize| raw.join[a][b];
    let top = n - 1;
    let mut violations = Vec::new();
    let mut flag = |ax: Axiom, bad: bool| {
        if bad && !violations.contains(&ax) {
            violations.push(ax);
        }
    };
    for a in 0..n {
        flag(Axiom::Idempotence, j(a, a) != a);
        flag(Axiom::ZeroNeutral, j(a, 0) != a || j(0, a) != a);
        flag(Axiom::TopAbsorbing, j(a, top) != top || j(top, a) != top);
        for b in 0..n {
            flag(Axiom::Commutativity, j(a, b) != j(b, a));
            for c in 0..n {
                flag(Axiom::Associativity, j(a, j(b, c)) != j(j(a, b), c));
            }
        }
    }
    // The induced relation must be a partial order (antisymmetric, transitive).
    let leq = |a: usize, b: usize| j(a, b) == b;
    for a in 0..n {
        for b in 0..n {
            flag(Axiom::PartialOrder, a != b && leq(a, b) && leq(b, a));
            for c in 0..n {
                flag(Axiom::PartialOrder, leq(a, b) && leq(b, c) && !leq(a, c));
            }
        }
    }
    if !violations.is_empty() {
        return Err(LatticeError::NotASemilattice { violations });
    }
    if n == 1 {
        return Err(LatticeError::BadParameter(
            "the zero ring has no maximal ideal".into(),
        ));
    }
    let m = raw.maximal;
    if m == top {
        return Err(LatticeError::NotLocal {
            element: raw.elements[top].clone(),
        });
    }
    for i in 0..top {
        if j(i, m) != m {
            return Err(LatticeError::NotLocal {
                element: raw.elements[i].clone(),
            });
        }
    }
    Ok(IdealLattice {
        join: raw.join.iter().flatten().copied().collect(),
        name: raw.name,
        labels: raw.elements,
        maximal: m,
    })
}

/// Builds the lattice of a built-in template.
pub fn make_builtin(family: Family) -> Result<IdealLattice, LatticeError> {
    let raw = match family {
        Family::Field => RawLattice {
            name: "F".into(),
            elements: vec!["0".into(), "F".into()],
            join: vec![vec![0, 1], vec![1, 1]],
            maximal: 0,
        },
        Family::Chain { k } => {
            let k = k as usize;
            let mut elements = vec!["0".to_string()];
            for i in 1..=k {
                let power = k + 1 - i;
                elements.push(if power == 1 {
                    "M".to_string()
                } else {
                    format!("M^{power}")
                });
            }
            elements.push("R".into());
            let n = k + 2;
            RawLattice {
                name: format!("chain({k})"),
                elements,
                join: (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect(),
                maximal: if k == 0 { 0 } else { k },
            }
        }
        Family::TwogenXy { q } => twogen(q, true)?,
        Family::TwogenFlat { q } => twogen(q, false)?,
    };
    validate_lattice(raw)
}

fn line_labels(q: usize) -> Vec<String> {
    let mut v = vec!["<x>".to_string(), "<y>".to_string(), "<x+y>".to_string()];
    for i in 2..q {
        v.push(format!("<x+a{i}y>"));
    }
    v
}

fn twogen(q: u32, with_square: bool) -> Result<RawLattice, LatticeError> {
    if q < 2 {
        return Err(LatticeError::BadParameter(format!(
            "residue field size q = {q} must be at least 2"
        )));
    }
    let q = q as usize;
    let mut elements = vec!["0".to_string()];
    if with_square {
        elements.push("<xy>".into());
    }
    let first_line = elements.len();
    elements.extend(line_labels(q));
    let m = elements.len();
    elements.push("M".into());
    elements.push("R".into());
    let n = elements.len();
    let top = n - 1;
    let is_line = |i: usize| i >= first_line && i < m;
    let join = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        a
                    } else if a == 0 || b == 0 {
                        a.max(b)
                    } else if a == top || b == top {
                        top
                    } else if is_line(a) && is_line(b) {
                        m
                    } else {
                        // one of them is <xy> (below every line) or M
                        a.max(b)
                    }
                })
                .collect()
        })
        .collect();
    Ok(RawLattice {
        name: if with_square {
            format!("twogen_xy({q})")
        } else {
            format!("twogen_flat({q})")
        },
        elements,
        join,
        maximal: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_raw() -> RawLattice {
        RawLattice {
            name: "c".into(),
            elements: vec!["0".into(), "M".into(), "R".into()],
            join: (0..3).map(|a| (0..3).map(|b| a.max(b)).collect()).collect(),
            maximal: 1,
        }
    }

    #[test]
    fn chain_is_valid() {
        let l = validate_lattice(chain_raw()).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.is_chain());
    }

    #[test]
    fn commutativity_violation() {
        let mut raw = chain_raw();
        raw.join[1][2] = 1;
        match validate_lattice(raw) {
            Err(LatticeError::NotASemilattice { violations }) => {
                assert!(violations.contains(&Axiom::Commutativity))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn two_coatoms_not_local() {
        // 0 < a, b < R with a + b = R
        let raw = RawLattice {
            name: "bad".into(),
            elements: vec!["0".into(), "a".into(), "b".into(), "R".into()],
            join: vec![
                vec![0, 1, 2, 3],
                vec![1, 1, 3, 3],
                vec![2, 3, 2, 3],
                vec![3, 3, 3, 3],
            ],
            maximal: 1,
        };
        assert!(matches!(
            validate_lattice(raw),
            Err(LatticeError::NotLocal { .. })
        ));
    }

    #[test]
    fn bad_index_and_shape() {
        let mut raw = chain_raw();
        raw.join[0][1] = 7;
        assert!(matches!(validate_lattice(raw), Err(LatticeError::BadIndex { .. })));
        let mut raw = chain_raw();
        raw.join.pop();
        assert!(matches!(validate_lattice(raw), Err(LatticeError::NotSquare { .. })));
    }

    #[test]
    fn builtins() {
        let f = make_builtin(Family::Field).unwrap();
        assert_eq!((f.len(), f.maximal()), (2, 0));
        let c1 = make_builtin(Family::Chain { k: 1 }).unwrap();
        assert_eq!((c1.len(), c1.nontrivial_count()), (3, 1));
        let xy = make_builtin(Family::TwogenXy { q: 2 }).unwrap();
        assert_eq!(
            xy.labels(),
            &["0", "<xy>", "<x>", "<y>", "<x+y>", "M", "R"].map(String::from)
        );
        assert!(!xy.is_chain());
        assert!(xy.maximal_decomposes());
        let flat = make_builtin(Family::TwogenFlat { q: 2 }).unwrap();
        assert_eq!(flat.nontrivial_count(), 4);
        assert_eq!(flat.len(), Family::TwogenFlat { q: 2 }.element_count());
        assert!(matches!(
            make_builtin(Family::TwogenFlat { q: 1 }),
            Err(LatticeError::BadParameter(_))
        ));
        let flat3 = make_builtin(Family::TwogenFlat { q: 3 }).unwrap();
        assert_eq!(flat3.nontrivial_count(), 5);
    }

    #[test]
    fn chain_zero_is_a_field() {
        let c0 = make_builtin(Family::Chain { k: 0 }).unwrap();
        assert!(c0.is_field());
        assert_eq!(c0.maximal(), 0);
    }

    #[test]
    fn canonical_table_ignores_labels_and_element_order() {
        let flat = make_builtin(Family::TwogenFlat { q: 2 }).unwrap();
        let mut raw = flat.to_raw();
        // swap the first two line ideals
        let n = raw.elements.len();
        let swap = |i: usize| match i {
            1 => 2,
            2 => 1,
            x => x,
        };
        let old = raw.join.clone();
        for a in 0..n {
            for b in 0..n {
                raw.join[swap(a)][swap(b)] = swap(old[a][b]);
            }
        }
        raw.elements = raw.elements.iter().map(|s| format!("{s}'")).collect();
        let other = validate_lattice(raw).unwrap();
        assert_eq!(flat.canonical_table(), other.canonical_table());
    }
}
