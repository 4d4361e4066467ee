use thiserror::Error;

/// Errors shared across the crate. Structure validators report their own
/// violation types; this enum covers construction and precondition failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {id} out of range (graph has {n} vertices)")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop ({0}, {0}) rejected")]
    SelfLoop(usize),
    #[error("endpoints must differ, got {0} twice")]
    EqualEndpoints(usize),
    #[error("vertex sets overlap (shared vertex {0})")]
    OverlappingSets(usize),
    #[error("graph has {n} vertices, exceeding the limit {limit}; use the lower-bound mode")]
    VertexLimitExceeded { n: usize, limit: usize },
    #[error("empty graph not accepted here")]
    EmptyGraph,
    #[error("size parameter must be positive")]
    ZeroSize,
    #[error("pattern must contain at least one 1")]
    AllZeroPattern,
    #[error("pattern bits must start and end with at least {c} zeroes")]
    PaddingViolation { c: usize },
    #[error("walk and adjacency bitstring lengths differ: {walk} vs {bits}")]
    WalkBitsMismatch { walk: usize, bits: usize },
    #[error("subdivision map missing edge ({0}, {1})")]
    MissingEdgeExtra(usize, usize),
    #[error("budget exhausted")]
    BudgetExhausted,
    #[error("{0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
