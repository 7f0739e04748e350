use thiserror::Error;

use crate::pcs::{Sign, Violation};

/// Errors raised while constructing or transforming precubical sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PcsError {
    #[error("invalid cube name {0:?}")]
    InvalidName(String),
    #[error("duplicate cube name {0:?}")]
    DuplicateName(String),
    #[error("unknown cube {0:?}")]
    UnknownCube(String),
    #[error("{0:?} is not a vertex")]
    NotAVertex(String),
    #[error("face index {index} out of range for {cube:?} of dimension {dim}")]
    FaceIndexOutOfRange { cube: String, index: usize, dim: usize },
    #[error("face {index}{sign} of {cube:?} declared twice")]
    DuplicateFace { cube: String, index: usize, sign: Sign },
    #[error("precubical set is invalid ({} violation(s)), first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a morphism: {0}")]
    Morphism(String),
}

pub type Result<T, E = PcsError> = std::result::Result<T, E>;
