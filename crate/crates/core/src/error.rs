use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size {n} exceeds the supported maximum of {max} points")]
    CapExceeded { n: usize, max: usize },

    #[error("carrier must contain at least one point")]
    EmptyCarrier,

    #[error("dimension mismatch: {left} points vs {right} points")]
    DimensionMismatch { left: usize, right: usize },

    #[error("point {point} is outside the carrier 0..{n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("entourage is missing the diagonal pair ({0},{0})")]
    MissingDiagonal(usize),

    #[error("relation is not a preorder: ({x},{y}) and ({y},{z}) present but ({x},{z}) missing")]
    NotPreorder { x: usize, y: usize, z: usize },

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("not a quasi-uniformity: {0}")]
    NotQuasiUniformity(String),

    #[error("invalid entourage chain: {0}")]
    InvalidChain(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a monoid: {0}")]
    NotMonoid(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
