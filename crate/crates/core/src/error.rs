use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants fall into three families that callers (the CLI in particular)
/// map to distinct exit statuses: parameter errors, input-format errors and
/// model violations. See [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (valid range is {min}..={max})")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix has a zero diagonal entry at row {0}")]
    ZeroDiagonal(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex label {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("isolated vertex {0}: every server must be able to query at least one other server")]
    IsolatedVertex(usize),

    #[error("word is not a codeword: parity check fails at vertex {0}")]
    NotCodeword(usize),

    #[error("code has 2^{dimension} codewords, which exceeds the limit {limit}")]
    LimitExceeded { dimension: usize, limit: u128 },
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad numeric parameters or out-of-range indices.
    Parameter,
    /// Unparseable or malformed input data.
    Format,
    /// Input is well formed but violates the storage-code model.
    Model,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::EmptyMatrix { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NotSquare { .. }
            | Error::NotSymmetric { .. }
            | Error::ZeroDiagonal(_)
            | Error::InvalidParameters(_)
            | Error::LimitExceeded { .. } => ErrorKind::Parameter,
            Error::EmptyGraph
            | Error::SelfLoop(_)
            | Error::VertexOutOfRange { .. }
            | Error::Parse { .. } => ErrorKind::Format,
            Error::IsolatedVertex(_) | Error::NotCodeword(_) => ErrorKind::Model,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
