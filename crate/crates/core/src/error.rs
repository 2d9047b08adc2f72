use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed measure: {0}")]
    Structural(String),

    #[error("measure has zero or non-finite mass")]
    ZeroMass,

    #[error("expected a probability measure, total mass is {mass}")]
    NotProbability { mass: f64 },

    #[error("operation requires an atom-free measure")]
    AtomicInput,

    #[error("operation requires a purely atomic measure")]
    NonAtomicInput,

    #[error("degenerate or inverted interval [{lo}, {hi}]")]
    DegenerateInterval { lo: f64, hi: f64 },

    #[error("intervals are not disjoint and increasing near index {index}")]
    OverlappingIntervals { index: usize },

    #[error("panels overlap near index {index}")]
    OverlappingPanels { index: usize },

    #[error(
        "equilibrium solve stopped after {iterations} iterations with residual {residual:.3e} (target {target:.3e})"
    )]
    NonConvergence {
        iterations: usize,
        residual: f64,
        target: f64,
    },

    #[error("support [{lo}, {hi}] is not contained in the target set")]
    SupportEscapes { lo: f64, hi: f64 },

    #[error("measure fails the potential non-negativity criterion: minimum {min:.6e} at x = {at:.15}")]
    NotRealizable { min: f64, at: f64 },

    #[error("{0}")]
    Domain(String),
}
