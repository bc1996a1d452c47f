use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial has minimum q-exponent {min_exponent}, cannot divide by q^{required}")]
    NonDivisible { min_exponent: u32, required: u32 },
    #[error("q-degree {degree} exceeds requested reversal degree {requested}")]
    ReversalDegree { degree: u32, requested: u32 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: {rows}x{cols} matrix with right-hand side of length {rhs}")]
    DimensionMismatch { rows: usize, cols: usize, rhs: usize },
    #[error("fraction-free elimination step was not exact")]
    InexactElimination,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("shape {inner} is not contained in {outer}")]
    ContainmentViolation { inner: String, outer: String },
    #[error("{outer}/{inner} is not a horizontal strip")]
    NotHorizontalStrip { inner: String, outer: String },
    #[error("content {0} is not a partition")]
    NonPartitionContent(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("outside the domain: {0}")]
    DomainViolation(String),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("result still has a nontrivial denominator: {0}")]
    DenominatorResidue(String),
    #[error("{what} {size} exceeds the limit {limit} (raise it with {var})")]
    GuardExceeded {
        what: String,
        size: usize,
        limit: usize,
        var: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
