use thiserror::Error;

use crate::multigraph::EdgeId;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("edge subset does not belong to this graph")]
    ForeignEdge,
    #[error("subset enumeration supports at most {limit} edges, graph has {edges}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("edge {0} has no label")]
    UnlabeledEdge(EdgeId),
    #[error("no weight given for label `{0}`")]
    MissingWeight(String),
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("polynomial parse error at byte {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        allowed: String,
    },
    #[error("unknown {kind} `{name}` (expected one of {allowed})")]
    UnknownName {
        kind: &'static str,
        name: String,
        allowed: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
