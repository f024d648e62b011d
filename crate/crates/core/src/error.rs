use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A 1-based mutation direction or label outside `1..=n`.
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("integer overflow while {context}")]
    Overflow { context: &'static str },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("matrix dimensions disagree: {0}")]
    Dimension(String),

    #[error("matrix is not sign-skew-symmetric: b[{i}][{j}] = {bij}, b[{j}][{i}] = {bji}")]
    NotSignSkewSymmetric {
        i: usize,
        j: usize,
        bij: i64,
        bji: i64,
    },

    #[error("matrix is not acyclic")]
    NotAcyclic,

    /// Raised by the source numbering when the remaining submatrix has no source.
    #[error("no source among remaining indices {remaining:?} (input is not acyclic)")]
    NoSource { remaining: Vec<usize> },

    #[error("{what} must be positive")]
    ZeroBound { what: &'static str },

    #[error("green sequence verification failed: {0}")]
    GreenVerification(String),

    #[error("orbit-mutation at {label} refused: {detail}")]
    GammaViolation { label: usize, detail: String },

    #[error("interior exhausted: radius {radius} is below the 2 units one orbit-mutation consumes")]
    ExhaustedInterior { radius: usize },

    #[error("truncation depth {m} is below the interior budget {needed} for a sequence of length {len}")]
    InteriorBudget { m: usize, needed: usize, len: usize },

    #[error("no interior vertex carries label {0}")]
    MissingLabel(usize),

    #[error("vertex v{vertex} (label {label}) is not interior")]
    NotInterior { vertex: usize, label: usize },

    #[error("no vertex with id {0}")]
    UnknownVertex(usize),

    #[error("seed document: {0}")]
    SeedDocument(String),
}
