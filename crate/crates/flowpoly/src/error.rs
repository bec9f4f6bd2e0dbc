use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An edge reference does not address an existing edge copy.
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    /// A graph operation was applied outside its precondition.
    #[error("invalid operation: {0}")]
    InvalidOperation(String),

    /// An argument violated a documented domain restriction.
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial division left a nonzero remainder.
    #[error("inexact polynomial division")]
    InexactDivision,

    /// A decomposition recombination failed; indicates an internal bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Subset-expansion engine refused an input above its edge limit.
    #[error("edge count {m} exceeds the subset-expansion limit {limit}")]
    OracleLimit { m: usize, limit: usize },

    /// Enumeration refused a vertex count above the practical limit.
    #[error("vertex count {n} exceeds the enumeration limit {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    /// Input text could not be parsed as a graph.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
