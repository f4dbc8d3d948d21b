use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("duplicate cell ({0},{1})")]
    DuplicateCell(i32, i32),

    #[error("cell ({0},{1}) is not in the diagram")]
    CellNotInDiagram(i32, i32),

    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<u32>),

    #[error("words must have positive letters")]
    InvalidWord,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("size {n} exceeds the bound {bound} (use an explicit override to continue)")]
    BoundExceeded { n: usize, bound: usize },

    #[error("color {color} is out of range for degree {degree}")]
    ColorOutOfRange { color: usize, degree: usize },

    #[error("operation is undefined on the empty permutation")]
    EmptyPermutation,

    #[error("descent set is not contained in the diagram")]
    NotSubdiagram,

    #[error("descent set is not realizable for this diagram")]
    NotRealizable,

    #[error("the {0} filter needs a diagram")]
    DiagramRequired(&'static str),

    #[error("restriction interval is empty")]
    EmptyInterval,

    #[error("not in the Schur span: {0}")]
    NotSchurSpan(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
