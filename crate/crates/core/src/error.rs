use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step {found:?} at index {index}: expected 'N' or 'E'")]
    InvalidStep { index: usize, found: char },

    #[error("endpoint mismatch: upper path ends at {upper:?}, lower path ends at {lower:?}")]
    EndpointMismatch {
        upper: (usize, usize),
        lower: (usize, usize),
    },

    #[error("paths cross: upper path goes below lower path at prefix {prefix}")]
    Crossing { prefix: usize },

    #[error("element {element} is out of range 1..={ground_size}")]
    ElementOutOfRange { element: usize, ground_size: usize },

    #[error("basis {0:?} is not strictly increasing")]
    UnsortedBasis(Vec<usize>),

    #[error("{what} cap exceeded: {actual} > {cap} (raise the cap or shrink the instance)")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("toric h-vector {0:?} is not symmetric")]
    AsymmetricHVector(Vec<String>),

    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
