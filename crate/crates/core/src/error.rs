use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("letter index {index} out of range for an alphabet of {size} letters")]
    InvalidWord { index: usize, size: usize },
    #[error("the zero polynomial has no leading term")]
    NoLeadingTerm,
    #[error("dimension mismatch: expected row length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("relation has the empty word as leading word")]
    EmptyLeadingWord,
    #[error("degree bound {bound} is smaller than required degree {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("invalid Leibniz algebra: {0}")]
    InvalidAlgebra(String),
    #[error("word is not a Lyndon-Shirshov word")]
    NotLyndonShirshov,
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("invalid diword: center {center} outside a word of length {len}")]
    InvalidCenter { center: usize, len: usize },
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
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
