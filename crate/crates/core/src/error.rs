use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 2, got {0}")]
    InvalidDegree(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("expected {expected} coefficients, got {found}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("invalid rational bound: {0}")]
    InvalidBound(String),
    #[error("bound must be nonnegative")]
    NegativeBound,
    #[error("bound must be positive")]
    NonPositiveBound,
    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("homomorphism is a module homomorphism: {0}")]
    ModuleHom(String),
    #[error("invalid witness instance: {0}")]
    InvalidInstance(String),
    #[error("search exceeded {cap} iterations: {context}")]
    IterationCap { cap: u64, context: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
