use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` covers malformed text input; every other variant is a
/// mathematical domain violation on well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("height sequence is not {0}")]
    NotMonotone(&'static str),
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("direction mismatch: {left} vs {right}")]
    DirectionMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("ambient size mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("cardinality mismatch: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },
    #[error("invalid partial injection: {0}")]
    InvalidMap(String),
    #[error("map is not in IC_n: {0}")]
    NotInIcn(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("{what} = {value} exceeds the bound {bound}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        bound: usize,
    },
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
