use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (dimensions, arities, lengths).
    #[error("input error: {0}")]
    Input(String),

    /// A file could not be parsed; `line` and `column` are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported dimension {dimension}: {context}")]
    UnsupportedDimension { dimension: usize, context: String },

    /// The complex is structurally broken (e.g. a facet shared by three
    /// simplices), so no dual graph exists.
    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    /// Peeling got stuck: every facet of the residual complex is glued.
    /// Impossible for complexes realized in `R^d`.
    #[error("unrealizable complex: no simplex with an exposed facet among {residual} remaining")]
    Unrealizable { residual: usize },

    /// An internal geometric invariant failed; indicates a bug or inconsistent
    /// coordinates.
    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("oracle refused: {nodes} nodes exceeds limit {limit}")]
    OracleLimit { nodes: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
