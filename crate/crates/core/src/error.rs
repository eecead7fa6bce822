use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    InvalidVertex(VertexId),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("the given set is not an X-Y separator")]
    NotASeparator,
    /// X and Y cannot be separated by deletable vertices. Callers treat this as
    /// an ordinary outcome (infinite cover excess, infeasible cut).
    #[error("no separator exists")]
    NoSeparatorExists,
    #[error("separator is not minimal")]
    NonMinimalSeparator,
    #[error("graph is not X-Y normalized")]
    NotNormalized,
    #[error("set is not contained in N(X)")]
    NotInNeighborhood,
    #[error("terminals {0} and {1} are adjacent")]
    AdjacentTerminals(VertexId, VertexId),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
