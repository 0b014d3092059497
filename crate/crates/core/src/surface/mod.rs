//! Orientable genus and crosscap number with checkable certificates.
//!
//! Every reported value comes with a lower-bound certificate and an
//! upper-bound certificate. When the search budget runs out before they
//! meet, the result is an interval rather than a point value.

mod blocks;
mod bounds;
mod certificate;
mod engine;
mod exact;
mod rotation;

use thiserror::Error;

pub use blocks::blocks;
pub use bounds::{
    crosscap_complete, crosscap_complete_bipartite, euler_lower_bounds, genus_complete,
    genus_complete_bipartite,
};
pub use certificate::{
    subdivision_lower_bound, verify_certificate, verify_report, BlockReport, Embedding, Invariant,
    SurfaceCertificate, SurfaceReport,
};
pub use exact::{
    crosscap_exact, crosscap_of, crosscap_up_to, genus_exact, genus_exact_from, genus_of, genus_up_to,
};
pub use rotation::{
    trace_faces, trace_faces_signed, EdgeSign, FaceTrace, RotationSystem, SignedRotationSystem,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("search budget exhausted; value lies in [{lb}, {ub}]")]
    BudgetExhausted { lb: u32, ub: u32 },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}
