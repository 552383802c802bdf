use thiserror::Error;

use crate::dimcat::{DimName, DimSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: codomain {left} is not the domain {right}")]
    DomainMismatch { left: DimSet, right: DimSet },

    #[error("name clash: `{0}` is not fresh")]
    NameClash(DimName),

    #[error("invalid dimension name `{0}`")]
    InvalidName(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("dimension {dim} exceeds the truncation bound {bound}")]
    DimensionOverflow { dim: usize, bound: usize },

    #[error("unknown cube `{cube}` at dimension {dim}")]
    UnknownCube { dim: usize, cube: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("adjacency violation: {0}")]
    AdjacencyViolation(String),

    #[error("fiber mismatch: {0}")]
    FiberMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
