use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty partition")]
    EmptyPartition,
    #[error("partition {parts:?} is not admissible for {kind}: {reason}")]
    InadmissiblePartition { parts: Vec<usize>, kind: String, reason: String },
    #[error("index {index} out of range (allowed {lo}..={hi})")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("operation needs an orthogonal or symplectic model")]
    WrongKind,
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("bilinear form on the centraliser pairing is degenerate")]
    DegeneratePairing,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("size guard exceeded: {0}")]
    SizeGuardExceeded(String),
    #[error("no admissible subspace found after {0} attempts")]
    NoSubspaceFound(usize),
    #[error("unsupported partition family: {0}")]
    UnsupportedPartitionFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
