use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for a graph with {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has odd order {0}")]
    OddOrder(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph contains an induced claw centred at vertex {0}")]
    NotClawFree(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
