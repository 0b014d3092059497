//! Prime ideal sum graphs of finite commutative rings and their
//! topological invariants.

pub mod classifier;
pub mod graph;
pub mod harness;
pub mod patterns;
pub mod ring;
pub mod surface;
