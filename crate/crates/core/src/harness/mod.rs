//! Family enumeration, prediction-versus-computation checks, the results
//! ledger and the command line.

pub mod cli;
mod family;
mod ledger;
mod verify;

use thiserror::Error;

pub use family::{enumerate_family, vertex_count, Budgets, FamilyConfig};
pub use ledger::{Ledger, LedgerEntry, LedgerScan};
pub use verify::{
    verify, verify_ring, ComputedProfile, Evidence, Interval, RowStatus, Summary, VerificationReport,
    VerificationRow, Verdict,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("bad family config: {0}")]
    BadConfig(String),
    #[error("ledger line {line}: {message}")]
    CorruptLedger { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
