use std::fmt;

/// Errors surfaced by the library.
///
/// Precondition violations (dimension mismatches, points off a graph, bad
/// time steps) are errors; negative mathematical verdicts (an empty costate
/// tube, a refuted inclusion) are ordinary return values, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand dimensions do not line up.
    Dimension(String),
    /// A `.vi` document (or an inline rational / vector literal) is malformed.
    Parse(String),
    /// An operation that requires a bounded set received an unbounded one.
    Unbounded(String),
    /// The configured piece budget was exceeded while a union grew.
    PieceBudget { budget: usize, reached: usize },
    /// A semantic precondition failed (point not on the graph, dt <= 0, ...).
    Precondition(String),
    /// The operation is only exact in the stated dimensions and the caller
    /// asked for a case outside them.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Unbounded(m) => write!(f, "unbounded set: {m}"),
            Error::PieceBudget { budget, reached } => {
                write!(f, "piece budget exceeded: budget {budget}, reached {reached}")
            }
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

impl std::error::Error for Error {}
