//! Modules, projective resolutions and derived Hom dimensions.
//!
//! Everything is generic over an exact [`Field`](crate::field::Field). Right
//! modules are quiver representations; maps between projectives are
//! matrices of path combinations acting by left multiplication. Hom spaces
//! in the derived category are computed as chain maps modulo homotopy
//! from a (truncated) projective resolution.

mod complex;
mod hom;
mod module;
mod resolve;
mod string;

use thiserror::Error;

pub use complex::{
    cohomology_dim_vector, render_comb, CohomDimVector, ComplexTerm, ModComplex, PathComb, PathMatrix, ProjComplex,
};
pub use hom::{ext_dim, hom_shift_dim, hom_table, HomTable, MarginPolicy};
pub use module::{hom_dim, indec_projective, simple_module, DimVector, ModuleMap, RealizedProjective, RepModule};
pub use resolve::{projective_cover, resolve, ProjectiveCover};
pub use string::{
    build_string_object, infinite_gldim_check, lambda_hom_table, lambda_margin_policy, string_objects, StringObject,
};

use crate::quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("module or complex belongs to a different algebra")]
    AlgebraMismatch,
    #[error("the zero module has no projective cover")]
    ZeroModule,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid string object: {0}")]
    InvalidObject(String),
    #[error("Hom table up to shift {hmax} did not stabilize; margins and tables tried: {history:?}")]
    NonStabilizing {
        hmax: usize,
        history: Vec<(usize, Vec<usize>)>,
    },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
