use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0} rejected")]
    SelfLoopRejected(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("partition does not cover the vertex set exactly")]
    PartitionNotCover,
    #[error("source and sink are the same vertex {0}")]
    SameVertex(VertexId),
    #[error("graph needs at least 2 vertices, has {0}")]
    TooFewVertices(usize),
    #[error("connectivity parameter k must be at least 1, got {0}")]
    BadK(usize),
    #[error("vertex sets must be disjoint")]
    OverlappingSets,
    #[error("vertex sets must be nonempty")]
    EmptySet,
    #[error("graph is not {0}-edge-connected")]
    NotKConnected(usize),
    #[error("graph is not edge-minimal {0}-edge-connected")]
    NotEdgeMinimal(usize),
    #[error("graph is not exactly {0}-edge-connected")]
    NotExactlyK(usize),
    #[error("{what} is {size}, above the exhaustive-search bound {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("cut is trivial")]
    TrivialCut,
    #[error("cut of value {value} is not minimum (edge connectivity {lambda})")]
    NotMinCut { value: usize, lambda: usize },
    #[error("claim `{claim}` violated: {detail}")]
    ClaimViolated { claim: &'static str, detail: String },
    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Variant name, for machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SelfLoopRejected(_) => "SelfLoopRejected",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::PartitionNotCover => "PartitionNotCover",
            Error::SameVertex(_) => "SameVertex",
            Error::TooFewVertices(_) => "TooFewVertices",
            Error::BadK(_) => "BadK",
            Error::OverlappingSets => "OverlappingSets",
            Error::EmptySet => "EmptySet",
            Error::NotKConnected(_) => "NotKConnected",
            Error::NotEdgeMinimal(_) => "NotEdgeMinimal",
            Error::NotExactlyK(_) => "NotExactlyK",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidCut(_) => "InvalidCut",
            Error::TrivialCut => "TrivialCut",
            Error::NotMinCut { .. } => "NotMinCut",
            Error::ClaimViolated { .. } => "ClaimViolated",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::Parse { .. } => "ParseError",
        }
    }
}
