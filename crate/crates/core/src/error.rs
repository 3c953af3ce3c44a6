use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity mismatch: pattern is {pattern}-uniform but host is {host}-uniform")]
    UniformityMismatch { pattern: usize, host: usize },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("unknown theorem {0}")]
    UnknownTheorem(String),

    #[error("no resolved branch for parameters: {0}")]
    NoBranch(String),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
