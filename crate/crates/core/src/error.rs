use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has cycle rank {0}; expected acyclic or unicyclic")]
    CycleRankTooHigh(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not acyclic")]
    NotAcyclic,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("not a cycle of the graph")]
    NotACycleOfGraph,
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("order {order} exceeds supported bound {bound}")]
    OrderAboveBound { order: usize, bound: usize },
    #[error("order {order} below supported minimum {min}")]
    OrderBelowBound { order: usize, min: usize },
    #[error("switching function covers {got} vertices, graph has {want}")]
    SwitchingSizeMismatch { got: usize, want: usize },
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
    #[error("join arity {k} out of range 1..={max}")]
    InvalidJoinArity { k: usize, max: usize },
    #[error("duplicate join target {0}")]
    DuplicateTarget(usize),
    #[error("join arity {k} does not match {signs} signs")]
    JoinSignMismatch { k: usize, signs: usize },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("classification inconsistency: {0}")]
    ClassificationInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
