use crate::graph::Edge;
use thiserror::Error;

/// Errors raised by constructions, oracles and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("input graph has no edges")]
    NoEdges,
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} in a simple graph")]
    DuplicateEdge(Edge),
    #[error("{what}: size {size} exceeds the limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph has no cycle")]
    NoCycle,
    #[error("decomposition has no bags")]
    EmptyDecomposition,
    #[error("decompositions overlap outside the shared vertex: {0}")]
    OverlapViolation(String),
    #[error("stacking needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DisconnectedInput => "DisconnectedInput",
            Error::NoEdges => "NoEdges",
            Error::EdgeNotInGraph(_) => "EdgeNotInGraph",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::NotTwoConnected => "NotTwoConnected",
            Error::NoCycle => "NoCycle",
            Error::EmptyDecomposition => "EmptyDecomposition",
            Error::OverlapViolation(_) => "OverlapViolation",
            Error::TooFewParts(_) => "TooFewParts",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::InternalInvariantBroken(_) => "InternalInvariantBroken",
            Error::BadParams(_) => "BadParams",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
