use thiserror::Error;

/// Errors produced by graph construction, recognition and drawing operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex {0} is not a cutvertex")]
    NotACutvertex(String),
    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(String),
    #[error("block is not an outerpath (weak dual is not a path)")]
    NotAnOuterpath,
    #[error("graph is not linear")]
    NotLinear,
    #[error("graph is not connected")]
    NotConnected,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
    #[error("segment is not axis-parallel")]
    NonAxisParallel,
    #[error("drawing vertex set does not match graph: {0}")]
    VertexMismatch(String),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
