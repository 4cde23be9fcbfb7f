//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {{{u},{v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("empty subset not allowed for {operation}")]
    EmptySubset { operation: &'static str },

    #[error("face set is not downward closed (face {face:?} is missing a subface)")]
    NotDownwardClosed { face: Vec<usize> },

    #[error("expected a squarefree ideal")]
    NotSquarefree,

    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
