//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse scalar from `{0}`")]
    ScalarParse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("span is not parity-graded; offending row mixes parities")]
    NotGraded,

    #[error("span is not bracket-closed: [{left}, {right}] escapes the span")]
    NotClosed { left: String, right: String },

    #[error("subspace is not an ideal: [{inside}, {outside}] leaves it")]
    NotAnIdeal { inside: String, outside: String },

    #[error("bilinear form is degenerate (rank {rank} < dim {dim})")]
    DegenerateForm { rank: usize, dim: usize },

    #[error("zeta vector invariant violated: sum of squares is {got}, expected -1")]
    ZetaInvariant { got: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown example id `{0}`")]
    UnknownExample(String),

    #[error("generator closure exceeded the expected dimension {expected} (reached {reached})")]
    ClosureTooLarge { expected: usize, reached: usize },

    #[error("coincident spectral points are not allowed")]
    CoincidentSpectralPoints,

    #[error("pairing between the two subalgebras is not unimodular after normalization")]
    PairingNotUnimodular,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
