//! Error type for the arithmetic layer.

use thiserror::Error;

/// Errors from polynomial certification, enumeration, and trace lifting.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument outside any more specific category.
    #[error("invalid input: {0}")]
    Domain(String),

    /// Polynomial degree above the exhaustive-search ceiling.
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooHigh { degree: usize, max: usize },

    /// Coefficient search box too large to scan exhaustively.
    #[error("search box holds {boxes} candidate polynomials, over the budget of {budget}")]
    SearchBudget { boxes: u128, budget: u128 },

    /// q must be p^k for a prime p and an exponent k >= 1.
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    /// Trace outside the closed segment [-2 sqrt(q), 2 sqrt(q)].
    #[error("trace {x} lies outside [-{bound}, {bound}]")]
    TraceOutOfRange { x: f64, bound: f64 },

    /// Bisection on a Sturm-isolated bracket failed to converge.
    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    /// Invariant that should hold by construction was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
