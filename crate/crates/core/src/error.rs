use thiserror::Error;

use crate::graph::{TwinKind, VertexSet};
use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum of {max} vertices")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric: {u} lists {v} but not the other way round")]
    Asymmetric { u: usize, v: usize },

    #[error("complete join of an empty list of graphs")]
    EmptyJoin,

    #[error("graph has isolated vertices {0}")]
    IsolatedVertex(VertexSet),

    #[error("graph is not twin-free: vertices {u} and {v} are {kind} twins")]
    Twins { u: usize, v: usize, kind: TwinKind },

    #[error("graph is not a split graph")]
    NotSplit,

    #[error("graph is not co-bipartite")]
    NotCobipartite,

    #[error("graph is not a tree")]
    NotATree,

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("invalid attachment: {0}")]
    InvalidAttachSpec(String),

    /// A construction produced a set that fails its own verifier. This can only
    /// happen if an input slipped past the precondition checks or there is a bug.
    #[error("{method} construction produced {set}, which is not locating-dominating")]
    ConstructionFailed { method: &'static str, set: VertexSet },

    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, value: impl TryInto<i64>, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value: value.try_into().unwrap_or(i64::MAX),
            reason,
        }
    }
}
