use thiserror::Error;

/// Errors produced by the matrix, partition and cable layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence must not be empty")]
    EmptySequence,

    #[error("degree value {value} at position {position} exceeds sequence length {len}")]
    ValueTooLarge {
        position: usize,
        value: usize,
        len: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("row and column sums violate the gap-free construction preconditions")]
    PreconditionFailed,

    #[error("row or column sums cannot be matched to the requested target")]
    TargetMismatch,

    #[error("enumeration is limited to m <= {max}, got m = {m}")]
    OracleTooLarge { m: usize, max: usize },

    #[error("no order exists for n = {n}")]
    NoOrder { n: usize },

    #[error("n out of range for order m: n = {n}, m = {m} needs {lower} <= n <= {upper}")]
    OutOfRange {
        n: usize,
        m: usize,
        lower: usize,
        upper: usize,
    },

    #[error("{sums} sum {sum} of index {index} is not a multiple of {index}")]
    NotDivisible {
        sums: &'static str,
        index: usize,
        sum: usize,
    },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("labels must be a permutation of 1..={n}")]
    BadLabels { n: usize },

    #[error("not a Knowlton-Graham partition pair: {0}")]
    NotKg(String),

    #[error("partition covers {partition} elements but the cable has {cable} wires")]
    SizeMismatch { partition: usize, cable: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
