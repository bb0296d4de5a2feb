use thiserror::Error;

use crate::algebra::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("bilinear form is not symmetric (asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("{0} is degenerate")]
    Degenerate(&'static str),

    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: Signature, found: Signature },

    #[error("matrix is singular (det = {det:e})")]
    Singular { det: f64 },

    #[error("structure has torsion; invariant is only defined for torsion-free structures")]
    Torsion,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
