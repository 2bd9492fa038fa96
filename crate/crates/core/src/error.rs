use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three families that callers (notably the CLI) map
/// onto distinct outcomes: bad input, a refused search, and an invariant
/// breach. The last one means a constructive step produced something a
/// theorem says cannot happen and must never be papered over.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("bipartition covers {got} vertices, graph has {expected}")]
    PartialAssignment { expected: usize, got: usize },

    #[error("bisection is unbalanced: |V1| = {v1}, |V2| = {v2}")]
    Unbalanced { v1: usize, v2: usize },

    #[error("cross edge ({0}, {1}) is not a host edge joining opposite sides")]
    BadCrossEdge(usize, usize),

    #[error("sequence is not nonincreasing at position {0}")]
    NotNonincreasing(usize),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cannot lay off {degree}: only {available} other entries")]
    LayoffTooLarge { degree: usize, available: usize },

    #[error("laying off decrements a zero entry at position {0}")]
    LayoffNegative(usize),

    #[error("degree sequence is not graphic")]
    NotGraphic,

    #[error("invalid multipartite spec: {0}")]
    InvalidSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("search refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("POTENTIAL-COUNTEREXAMPLE: {0}")]
    PotentialCounterexample(String),

    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures that contradict a proven statement (or, for the
    /// judicious search, one whose existence is guaranteed).
    pub fn is_invariant_breach(&self) -> bool {
        matches!(
            self,
            Error::InvariantBreach(_) | Error::PotentialCounterexample(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
