use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("index {index} out of range for size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("edge list contains a cycle")]
    Cycle,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("tree has no root")]
    MissingRoot,

    #[error("root has degree {0}, expected 1")]
    RootDegree(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not hermitian")]
    NotHermitian,

    #[error("realified inertia has an odd count ({0:?})")]
    OddRealifiedCount((usize, usize, usize)),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("residual factor {0} is not reciprocal")]
    NonReciprocal(String),

    #[error("order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("negative multiplicity {0}")]
    NegativeMultiplicity(i64),

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("unknown check '{0}'")]
    UnknownCheck(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
