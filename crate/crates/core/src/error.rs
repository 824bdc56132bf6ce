use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a directed cycle through element {0}")]
    CycleDetected(usize),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("digraph has a self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("malformed order: {0}")]
    MalformedOrder(String),
    #[error("formula arity {formula} does not match {orders} orders")]
    ArityMismatch { formula: usize, orders: usize },
    /// `x < y` in the poset but partial linear extension `ple` puts `y` first.
    #[error("partial linear extension #{ple} puts {y} below {x} although {x} < {y}")]
    NotAnExtension { ple: usize, x: usize, y: usize },
    #[error("certificate is not a boolean realizer of the poset")]
    NotARealizer,
    #[error("certificate is not a local realizer of the poset")]
    NotALocalRealizer,
    #[error("not a transitive orientation of the incomparability graph: {0}")]
    NotTransitiveOrientation(String),
    #[error("local realizer has width {width}, at most {max} supported")]
    WidthTooLarge { width: usize, max: usize },
    #[error("arity {arity} exceeds the supported maximum {max}")]
    ArityTooLarge { arity: usize, max: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("instance for k={k} would have {edges} elements, cap is {cap}")]
    SizeCapExceeded { k: usize, edges: String, cap: u64 },
    #[error("outside the exact search range: {0}")]
    ScaleExceeded(String),
    #[error("time budget of {0:?} exceeded")]
    Timeout(Duration),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("malformed candidate: {0}")]
    MalformedCandidate(String),
    #[error("normalized truth table matches none of the known cases")]
    NoCaseMatched,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
