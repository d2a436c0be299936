//! Composition factors and composition series of derived discrete algebras.
//!
//! A derived discrete algebra is built from copies of `k` and at most one
//! 2-truncated cycle algebra Λ(s,s,0) per component. The factors are read
//! off the normal form in closed form ([`composition_factors`]) and,
//! independently, produced by a chain of explicit algebra reductions
//! ([`strip_series`]) that a separate replay ([`verify_trace`]) rechecks.

mod factors;
mod reduce;
mod trace;

use thiserror::Error;

pub use factors::{composition_factors, is_n_derived_simple, FactorClass, FactorMultiset, SimplicityVerdict};
pub use reduce::{idempotent_subalgebra, is_radical_projective, DropShape, RadicalProjectivity};
pub use trace::{strip_series, verify_trace, FactorCheck, SeriesStep, SeriesTrace, TraceVerification};

use crate::classify::Verdict;
use crate::quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("component {index} has no known normal form: {reason}")]
    UnknownComponent { index: usize, reason: String },
    #[error("n must be at least 1")]
    InvalidN,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unsupported reduction: {0}")]
    UnsupportedDrop(String),
    #[error("algebra is not derived discrete (verdict: {0})")]
    NotDerivedDiscrete(Verdict),
    #[error("no reduction step applies to the residual algebra:\n{residual}")]
    Stuck { residual: String },
    #[error("trace does not start at the given presentation")]
    InitialMismatch,
    #[error("step {index}: precondition failed: {reason}")]
    StepPrecondition { index: usize, reason: String },
    #[error("factor mismatch: expected {expected}, trace has {found}")]
    FactorMismatch { expected: String, found: String },
    #[error("length violation: trace claims {length}, replay emitted {emitted}, rank is {rank}")]
    LengthViolation { length: usize, emitted: usize, rank: usize },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
