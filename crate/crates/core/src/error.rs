use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leaf {leaf} out of range for a tree of degree {degree}")]
    LeafOutOfRange { leaf: usize, degree: usize },
    #[error("arity mismatch: expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("malformed literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
    #[error("{0} is not a permutation of 1..n")]
    InvalidPermutation(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid order ideal: {0}")]
    InvalidIdeal(String),
    #[error("bi-leveled trees need at least one node")]
    EmptyBiLeveled,
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(literal: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            literal: literal.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
