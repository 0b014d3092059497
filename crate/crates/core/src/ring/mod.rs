//! Finite commutative rings as products of local rings, modelled through
//! their ideal lattices.

mod lattice;
mod product;
mod spec_file;

pub use lattice::{make_builtin, validate_lattice, Axiom, Family, IdealLattice, LatticeError, RawLattice};
pub use product::{product_ring, FactorShape, IdealTuple, RingError, RingShape, RingSpec};
pub use spec_file::{load_ring_spec, parse_ring_spec, Entry, FactorSpec, RingFile, SpecFileError};

/// Convenience: product of built-in templates.
pub fn ring_of(families: &[Family]) -> Result<RingSpec, LatticeError> {
    let factors = families
        .iter()
        .map(|&f| make_builtin(f))
        .collect::<Result<Vec<_>, _>>()?;
    product_ring(factors).map_err(|e| LatticeError::BadParameter(e.to_string()))
}
