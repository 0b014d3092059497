use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lattice::IdealLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("a product ring needs at least one factor")]
    EmptyProduct,
    #[error("ideal tuple has {got} coordinates, ring has {expected} factors")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("coordinate {coord} = {value} is not an element of factor {coord}")]
    BadCoordinate { coord: usize, value: usize },
}

/// An ideal of a product ring, one lattice element index per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdealTuple(Vec<usize>);

impl IdealTuple {
    pub fn new(coords: Vec<usize>) -> Self {
        IdealTuple(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for IdealTuple {
    fn from(v: Vec<usize>) -> Self {
        IdealTuple(v)
    }
}

/// `R = R_1 x ... x R_n` as an ordered list of local factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    factors: Vec<IdealLattice>,
}

/// Per-factor summary used by the classifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorShape {
    pub is_field: bool,
    /// Number of nonzero proper ideals.
    pub nontrivial: usize,
    pub is_chain: bool,
    /// The maximal ideal is a sum of two strictly smaller ideals.
    pub maximal_decomposes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingShape {
    pub factors: Vec<FactorShape>,
}

impl RingShape {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn field_count(&self) -> usize {
        self.factors.iter().filter(|f| f.is_field).count()
    }

    /// Factors sorted so that shape matching is order-insensitive.
    pub fn sorted(&self) -> Vec<FactorShape> {
        let mut v = self.factors.clone();
        v.sort();
        v
    }
}

/// Builds the product ring; factor order is preserved.
pub fn product_ring(factors: Vec<IdealLattice>) -> Result<RingSpec, RingError> {
    if factors.is_empty() {
        return Err(RingError::EmptyProduct);
    }
    Ok(RingSpec { factors })
}

impl RingSpec {
    pub fn factors(&self) -> &[IdealLattice] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Total number of ideals, zero and `R` included.
    pub fn ideal_count(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    pub fn zero(&self) -> IdealTuple {
        IdealTuple(vec![0; self.factors.len()])
    }

    pub fn whole(&self) -> IdealTuple {
        IdealTuple(self.factors.iter().map(|f| f.top()).collect())
    }

    /// Nonzero proper ideals in lexicographic order of coordinates.
    pub fn enumerate_vertices(&self) -> Vec<IdealTuple> {
        let zero = self.zero();
        let whole = self.whole();
        let mut out = Vec::with_capacity(self.ideal_count().saturating_sub(2));
        let mut cur = vec![0usize; self.factors.len()];
        loop {
            if cur != zero.0 && cur != whole.0 {
                out.push(IdealTuple(cur.clone()));
            }
            // mixed-radix increment, last coordinate fastest
            let mut k = self.factors.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.factors[k].len() {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    fn check(&self, a: &IdealTuple) -> Result<(), RingError> {
        if a.0.len() != self.factors.len() {
            return Err(RingError::ShapeMismatch {
                expected: self.factors.len(),
                got: a.0.len(),
            });
        }
        for (coord, (&value, f)) in a.0.iter().zip(&self.factors).enumerate() {
            if value >= f.len() {
                return Err(RingError::BadCoordinate { coord, value });
            }
        }
        Ok(())
    }

    /// Ideal sum, computed coordinatewise.
    pub fn ideal_join(&self, a: &IdealTuple, b: &IdealTuple) -> Result<IdealTuple, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.join_unchecked(a, b))
    }

    pub(crate) fn join_unchecked(&self, a: &IdealTuple, b: &IdealTuple) -> IdealTuple {
        IdealTuple(
            self.factors
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(f, (&x, &y))| f.join(x, y))
                .collect(),
        )
    }

    /// Primes of a finite product: the maximal ideal in exactly one
    /// coordinate, the whole factor everywhere else.
    pub fn is_prime_ideal(&self, a: &IdealTuple) -> bool {
        if self.check(a).is_err() {
            return false;
        }
        let mut below_top = self
            .factors
            .iter()
            .zip(&a.0)
            .enumerate()
            .filter(|(_, (f, &c))| c != f.top());
        match (below_top.next(), below_top.next()) {
            (Some((_, (f, &c))), None) => c == f.maximal(),
            _ => false,
        }
    }

    pub fn shape_summary(&self) -> RingShape {
        RingShape {
            factors: self
                .factors
                .iter()
                .map(|f| FactorShape {
                    is_field: f.is_field(),
                    nontrivial: f.nontrivial_count(),
                    is_chain: f.is_chain(),
                    maximal_decomposes: f.maximal_decomposes(),
                })
                .collect(),
        }
    }

    /// Deterministic, label-independent key. Factor order is significant.
    pub fn canonical_key(&self) -> String {
        self.factors
            .iter()
            .map(factor_key)
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Key that also ignores factor order (isomorphic products collide).
    pub fn multiset_key(&self) -> String {
        let mut keys: Vec<String> = self.factors.iter().map(factor_key).collect();
        keys.sort();
        keys.join("x")
    }

    /// Human-readable label such as `(M,F,0)`.
    pub fn label(&self, a: &IdealTuple) -> String {
        let parts: Vec<&str> = self
            .factors
            .iter()
            .zip(&a.0)
            .map(|(f, &c)| f.label(c))
            .collect();
        format!("({})", parts.join(","))
    }

    /// Short description of the factors, e.g. `chain(1) x F x F`.
    pub fn describe(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.name().to_string())
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn factor_key(f: &IdealLattice) -> String {
    let n = f.len();
    let table = f.canonical_table();
    let body: Vec<String> = table
        .chunks(n)
        .map(|row| row.iter().map(|v| format!("{v:x}")).collect::<Vec<_>>().join("."))
        .collect();
    format!("L{n}[{}]", body.join("/"))
}
