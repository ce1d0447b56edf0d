use thiserror::Error;

/// Errors raised by the membership, LP and fuzzy layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid S-curve parameters: {0}")]
    Parameter(String),

    #[error("membership degree {degree} outside invertible range ({lo}, {hi})")]
    DegreeRange { degree: f64, lo: f64, hi: f64 },

    #[error("model error: {0}")]
    Model(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("solver error after {iterations} pivots: {message}")]
    Solver { iterations: usize, message: String },

    #[error("oracle limits exceeded: {0}")]
    OracleLimits(String),

    #[error("degenerate goal interval: lower {lo} is not below upper {hi}")]
    DegenerateGoal { lo: f64, hi: f64 },

    #[error("fuzzy model infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
