use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} exceeds the facet-enumeration bound {bound}")]
    DimensionBound { dim: usize, bound: usize },

    #[error("unknown generator index {0}")]
    UnknownIndex(usize),

    #[error("invalid reflection data: {0}")]
    InvalidSystem(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration truncated at budget {0}")]
    Truncated(usize),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
