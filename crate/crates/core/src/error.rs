use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid column {0:?}: rows must be strictly increasing and positive")]
    InvalidColumn(Vec<usize>),

    #[error("{k} is not a descent of the diagram")]
    NotADescent { k: usize },

    #[error("reduced-word enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("zeta is undefined on a polynomial with nonzero constant term")]
    NonzeroConstantTerm,

    #[error("invalid rank sequence {0:?}: must be strictly increasing and positive")]
    InvalidRankSequence(Vec<usize>),

    #[error("diagram is not translucent")]
    NotTranslucent,

    #[error("diagram is not transparent")]
    NotTransparent,

    #[error("diagram is not clear")]
    NotClear,

    #[error("diagram does not fit the flag: row {row} exceeds {nrows} rows")]
    DoesNotFit { row: usize, nrows: usize },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}
