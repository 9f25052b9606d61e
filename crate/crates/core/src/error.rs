//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("series operation requires an invertible leading term: {0}")]
    NonInvertibleLeading(String),

    #[error("series order too low: need {needed}, have {have} ({context})")]
    InsufficientOrder {
        needed: i64,
        have: i64,
        context: String,
    },

    #[error("zeta table capped at weight {kmax}, expansion order {order} needs more")]
    ZetaTableExceeded { kmax: u32, order: u32 },

    #[error("potential is not supported by this operation: {0}")]
    UnsupportedPotential(String),

    #[error("minima are not degenerate: V(q0) = {residual} at working precision")]
    NonDegenerateMinima { residual: String },

    #[error("quadrature failed to converge: {0}")]
    QuadratureFailure(String),

    #[error("root bracketing failed on [{lo}, {hi}]: {detail}")]
    RootBracketing {
        lo: String,
        hi: String,
        detail: String,
    },

    #[error("requested precision not reached: achieved {achieved} digits of {requested}")]
    PrecisionNotReached { achieved: u32, requested: u32 },

    #[error("function pole hit at {0}")]
    PoleHit(String),

    #[error("Borel summation error: {0}")]
    Borel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
