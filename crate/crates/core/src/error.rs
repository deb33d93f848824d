use thiserror::Error;

use crate::graph::Vertex;
use crate::treewidth::TdViolation;

/// Errors produced by the solver suite.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not tagged bipartite")]
    NotBipartite,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(TdViolation),

    /// A brute-force or state-space routine refused an input above its
    /// configured capacity.
    #[error("capacity exceeded: {what} ({found} > limit {limit})")]
    Capacity {
        what: &'static str,
        found: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
