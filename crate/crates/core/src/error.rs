use thiserror::Error;

/// Errors produced by rate-region computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar input violated its domain (negative gain, λ outside [0, 1], ...).
    #[error("invalid {name}: {reason}")]
    InvalidInput { name: &'static str, reason: String },

    /// A joint distribution would exceed the cell budget.
    #[error("joint pmf needs {cells} cells, more than the limit of {limit}")]
    AlphabetTooLarge { cells: u128, limit: u128 },

    /// A distribution or channel table failed a normalization check.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// A half-plane constraint with a malformed normal or right-hand side.
    #[error("malformed constraint ({a}, {b}) · (Rs, Rp) <= {c}")]
    MalformedConstraint { a: f64, b: f64, c: f64 },

    /// An operation that needs a nonempty region got an empty one.
    #[error("empty rate region")]
    EmptyRegion,

    /// The rate polytope admitted no vertex; the constraint system is
    /// unbounded or degenerate, which a valid bundle never produces.
    #[error("rate polytope has no vertex: {0}")]
    DegeneratePolytope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
