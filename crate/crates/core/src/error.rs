use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {0}: no proper ideals to analyze")]
    NoProperIdeals(u64),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("graph has {vertices} vertices, above the cap of {cap}")]
    GraphTooLarge { vertices: u64, cap: usize },

    #[error("ideal code {0:?} does not belong to the ambient signature")]
    CodeMismatch(Vec<u32>),

    #[error("adjacency is irreflexive; both arguments are the same ideal")]
    SelfAdjacency,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
