use thiserror::Error;

/// Errors shared across the exact and numerical layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in the radical ring")]
    DivisionByZero,

    #[error("division is only defined by rationals and single-radical values, got {0}")]
    NonInvertibleDivisor(String),

    #[error("square root of a negative quantity: {0}")]
    NegativeRadicand(String),

    #[error("operands have {left} and {right} variables")]
    VariableMismatch { left: usize, right: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("action of the operator left the span of the weight basis: {0}")]
    NonTridiagonal(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("quadrature failed to converge to tolerance {tol} (last change {change})")]
    QuadratureNonConvergence { tol: f64, change: f64 },

    #[error("bisection did not reach tolerance {tol} within the iteration cap")]
    BisectionIterationCap { tol: f64 },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),

    #[error("invalid option: {0}")]
    InvalidOption(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
